// symspin: CSV sweeps over permutation-symmetric spin states.
#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symspin/sweeps.hpp"
#include "symspin/types.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::vector<std::string> states;
  std::vector<std::string> seeds;
  std::string hamiltonian = "counter_twist";
};

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw symspin::ConfigError("--seeds: bad entry '" + std::string(s) + "'");
  }
  return v;
}

// Seeds are single values or inclusive ranges a-b.
std::vector<std::uint64_t> expand_seeds(const std::vector<std::string>& items) {
  std::vector<std::uint64_t> out;
  for (const auto& item : items) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(to_u64(item));
      continue;
    }
    const auto lo = to_u64(std::string_view(item).substr(0, dash));
    const auto hi = to_u64(std::string_view(item).substr(dash + 1));
    if (hi < lo || hi - lo > 1000000) throw symspin::ConfigError("--seeds: bad range '" + item + "'");
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
  }
  return out;
}

void add_common(CLI::App* sub, symspin::SweepConfig& cfg, Options& opt) {
  sub->add_option("--n", cfg.n, "Number of spins");
  sub->add_option("--n-list", cfg.n_list, "Comma-separated spin counts")->delimiter(',');
  sub->add_option("--state", opt.states,
                  "State specs: ghz, dicke:<m>, dicke:half, comb:<s>, comb:auto, random:<seed>, "
                  "polarized, file:<csv>")
      ->delimiter(',');
  sub->add_option("--seeds", opt.seeds, "Seeds or ranges a-b, comma-separated")->delimiter(',');
  sub->add_option("--steps", cfg.steps, "Trajectory samples (>= 2)");
  sub->add_option("--t-max", cfg.t_max, "Final scaled time");
  sub->add_option("--out", cfg.out, "Output CSV path (default stdout)");
  sub->add_option("--jobs", cfg.jobs, "Worker threads");
  sub->add_option("--splits", cfg.splits, "Particle counts n_r for negativity columns")
      ->delimiter(',');
  sub->add_option("--hamiltonian", opt.hamiltonian, "counter_twist, twist, jx, jy or jz");
  sub->add_flag("--loss", cfg.loss, "Also emit the particle-loss squeezing table");
  sub->add_option("--tol", cfg.tolerance, "Oracle-check tolerance");
}

void emit(const std::vector<symspin::Table>& tables, const symspin::SweepConfig& cfg) {
  if (cfg.out.empty()) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i) std::cout << '\n';
      symspin::write_table(std::cout, tables[i], cfg);
    }
    return;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::string path = i == 0 ? cfg.out : cfg.out + ".loss.csv";
    std::ofstream f(path);
    if (!f) throw symspin::ConfigError("cannot write '" + path + "'");
    symspin::write_table(f, tables[i], cfg);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement and squeezing sweeps for symmetric spin states"};
  app.set_version_flag("--version", std::string(symspin::kToolVersion));
  app.require_subcommand(1);

  symspin::SweepConfig cfg;
  Options opt;
  const std::pair<const char*, const char*> commands[] = {
      {"entropy-splits", "Entropy of entanglement for every split k"},
      {"entropy-vs-n", "Even-split entropy against N"},
      {"pair-formation", "Two-spin concurrence and entanglement of formation"},
      {"extremal-scatter", "E_F at the {1,1} and even splits for many states"},
      {"negativity-reduced", "Even-split log negativity against particles remaining"},
      {"dicke-ordering", "E_F and E_N of two spins from Dicke states"},
      {"squeeze", "Squeezing trajectory, optionally with particle loss"},
      {"oracle-check", "Compare against the full 2^N reference"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), cfg, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    for (const auto& s : opt.states) cfg.states.push_back(symspin::StateSource::parse(s));
    cfg.seeds = expand_seeds(opt.seeds);
    cfg.hamiltonian = symspin::parse_hamiltonian_kind(opt.hamiltonian);

    const auto tables = symspin::run_command(cfg);
    emit(tables, cfg);
    if (cfg.command == "oracle-check" && !symspin::oracle_check_passed(tables.front(), cfg.tolerance)) {
      std::cerr << "oracle-check: deviation above " << cfg.tolerance << '\n';
      return kExitNumerical;
    }
  } catch (const symspin::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    // ConfigError, DomainError and DataError are all input problems.
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
