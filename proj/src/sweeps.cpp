#include "symspin/sweeps.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "symspin/csv_io.hpp"
#include "symspin/linalg.hpp"
#include "symspin/measures.hpp"
#include "symspin/oracle.hpp"
#include "symspin/parallel.hpp"
#include "symspin/symcore.hpp"

namespace symspin {

namespace {

constexpr std::string_view kCommands[] = {
    "entropy-splits",     "entropy-vs-n",   "pair-formation", "extremal-scatter",
    "negativity-reduced", "dicke-ordering", "squeeze",        "oracle-check"};

constexpr int kInterpolationPoints = 21;
constexpr int kDefaultOracleSeeds = 50;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_value(std::string_view text, std::string_view key) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("config: bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return v;
}

template <typename T>
std::string join(const std::vector<T>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_same_v<T, StateSource>) {
      out += items[i].to_string();
    } else {
      out += std::to_string(items[i]);
    }
  }
  return out;
}

std::string fmt(double v) { return format_double(v); }

const SymKet& require_ket(const LoadedState& s, std::string_view command) {
  if (const auto* psi = std::get_if<SymKet>(&s)) return *psi;
  throw ConfigError(std::string(command) + ": mixed-state input rejected (pure states only)");
}

SymDensity as_density(const LoadedState& s) {
  if (const auto* psi = std::get_if<SymKet>(&s)) return psi->density();
  return std::get<SymDensity>(s);
}

int state_n(const LoadedState& s) {
  return std::visit([](const auto& x) { return x.n(); }, s);
}

/// (source, N) pairs in sweep order. File sources contribute one entry.
struct Instance {
  const StateSource* src;
  int n;
};

std::vector<Instance> instances(const SweepConfig& cfg) {
  std::vector<Instance> out;
  for (const auto& src : cfg.states) {
    if (src.is_file()) {
      out.push_back({&src, 0});
    } else {
      for (int n : cfg.sizes()) out.push_back({&src, n});
    }
  }
  return out;
}

/// Runs `count` independent jobs, each filling its own row block, and
/// appends the blocks to `table` in index order.
template <typename Fn>
void run_blocks(Table& table, std::size_t count, int jobs, Fn&& fn) {
  std::vector<std::vector<std::vector<std::string>>> blocks(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    Table local;
    fn(i, local);
    blocks[i] = std::move(local.rows);
  });
  for (auto& b : blocks) {
    for (auto& r : b) table.rows.push_back(std::move(r));
  }
}

void require_states(const SweepConfig& cfg) {
  if (cfg.states.empty()) throw ConfigError(cfg.command + ": at least one --state is required");
}

double pair_en(const SymDensity& rho) { return log_negativity(reduce_to(rho, 2), 1); }

}  // namespace

// --- state sources ----------------------------------------------------------

StateSource StateSource::parse(std::string_view text) {
  if (text.starts_with("file:")) {
    std::string path(text.substr(5));
    if (path.empty()) throw ConfigError("state: empty file path");
    if (path.find_first_of(",;") != std::string::npos) {
      throw ConfigError("state: file path may not contain ',' or ';'");
    }
    return {std::move(path)};
  }
  try {
    return {StateSpec::parse(text)};
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::string StateSource::to_string() const {
  if (const auto* spec = std::get_if<StateSpec>(&what)) return spec->to_string();
  return "file:" + std::get<std::string>(what);
}

LoadedState load_state(const StateSource& src, int n) {
  if (const auto* spec = std::get_if<StateSpec>(&src.what)) return make_state(*spec, n);
  const auto& path = std::get<std::string>(src.what);
  std::ifstream in(path);
  if (!in) throw ConfigError("state: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // The second line is the column header, which tells the two formats apart.
  const auto first = text.find('\n');
  const bool is_ket = first != std::string::npos && text.compare(first + 1, 5, "re,im") == 0 &&
                      (text.size() == first + 6 || text[first + 6] == '\n' ||
                       text[first + 6] == '\r');
  std::istringstream is(text);
  if (is_ket) return read_ket_csv(is);
  return read_density_csv(is);
}

// --- configuration ----------------------------------------------------------

std::string SweepConfig::to_canonical() const {
  std::ostringstream os;
  os << "command=" << command << ";states=" << join(states) << ";n=" << n
     << ";n-list=" << join(n_list) << ";splits=" << join(splits) << ";t-max=" << fmt(t_max)
     << ";steps=" << steps << ";seeds=" << join(seeds)
     << ";hamiltonian=" << to_string(hamiltonian) << ";loss=" << (loss ? 1 : 0)
     << ";tol=" << fmt(tolerance);
  return os.str();
}

SweepConfig SweepConfig::parse_canonical(std::string_view text) {
  SweepConfig cfg;
  for (const auto& item : split(text, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("config: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string_view val = std::string_view(item).substr(eq + 1);
    if (key == "command") {
      cfg.command = val;
    } else if (key == "states") {
      for (const auto& s : split(val, ',')) cfg.states.push_back(StateSource::parse(s));
    } else if (key == "n") {
      cfg.n = parse_value<int>(val, key);
    } else if (key == "n-list") {
      for (const auto& s : split(val, ',')) cfg.n_list.push_back(parse_value<int>(s, key));
    } else if (key == "splits") {
      for (const auto& s : split(val, ',')) cfg.splits.push_back(parse_value<int>(s, key));
    } else if (key == "t-max") {
      cfg.t_max = parse_value<double>(val, key);
    } else if (key == "steps") {
      cfg.steps = parse_value<int>(val, key);
    } else if (key == "seeds") {
      for (const auto& s : split(val, ',')) cfg.seeds.push_back(parse_value<std::uint64_t>(s, key));
    } else if (key == "hamiltonian") {
      try {
        cfg.hamiltonian = parse_hamiltonian_kind(val);
      } catch (const DomainError& e) {
        throw ConfigError(e.what());
      }
    } else if (key == "loss") {
      cfg.loss = parse_value<int>(val, key) != 0;
    } else if (key == "tol") {
      cfg.tolerance = parse_value<double>(val, key);
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

std::vector<int> SweepConfig::sizes() const {
  if (!n_list.empty()) return n_list;
  if (n > 0) return {n};
  throw ConfigError(command + ": --n or --n-list is required");
}

void validate(const SweepConfig& cfg) {
  if (std::find(std::begin(kCommands), std::end(kCommands), cfg.command) == std::end(kCommands)) {
    throw ConfigError("unknown command '" + cfg.command + "'");
  }
  if (cfg.n < 0) throw ConfigError("--n must be positive");
  for (int n : cfg.n_list) {
    if (n < 1) throw ConfigError("--n-list entries must be positive");
  }
  if (cfg.steps < 2) throw ConfigError("--steps must be >= 2");
  if (!(cfg.t_max > 0) || !std::isfinite(cfg.t_max)) throw ConfigError("--t-max must be > 0");
  if (!(cfg.tolerance > 0)) throw ConfigError("tolerance must be > 0");
  if (cfg.jobs < 1) throw ConfigError("--jobs must be >= 1");

  if (cfg.command == "negativity-reduced" && (cfg.n > 0 || !cfg.n_list.empty())) {
    for (int n : cfg.sizes()) {
      if (n > kNegativityMaxN) {
        throw ConfigError("negativity-reduced: N = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kNegativityMaxN));
      }
    }
  }
  if (cfg.command == "entropy-splits") {
    // Density files are the only mixed-state sources.
    for (const auto& s : cfg.states) {
      if (s.is_file() && std::holds_alternative<SymDensity>(load_state(s, 0))) {
        throw ConfigError("entropy-splits: mixed-state input rejected (pure states only)");
      }
    }
  }
  if (cfg.command == "squeeze") {
    if (cfg.n < 4) throw ConfigError("squeeze: --n >= 4 is required");
    for (int nr : cfg.splits) {
      if (nr < 2 || nr > cfg.n) throw ConfigError("squeeze: --splits entries must be in [2, N]");
    }
  }
  if (cfg.command == "oracle-check" && (cfg.n > 0 || !cfg.n_list.empty())) {
    for (int n : cfg.sizes()) {
      if (n < 2 || n > oracle::kMaxEvolveSpins) {
        throw ConfigError("oracle-check: N must be in [2, " +
                          std::to_string(oracle::kMaxEvolveSpins) + "]");
      }
    }
  }
  if (cfg.command == "dicke-ordering" && cfg.n == 0 && cfg.n_list.empty()) {
    throw ConfigError("dicke-ordering: --n or --n-list is required");
  }
}

// --- output -----------------------------------------------------------------

std::string metadata_line(const SweepConfig& cfg) {
  return "# " + std::string(kToolVersion) + " | config=" + cfg.to_canonical() +
         " | rng=" + std::string(rng_algorithm());
}

void write_table(std::ostream& out, const Table& table, const SweepConfig& cfg) {
  out << metadata_line(cfg) << '\n';
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

Table measure_table() { return {{"state_spec", "n", "n_r", "k", "measure_name", "value"}, {}}; }

void add_measure(Table& t, std::string_view state, int n, int n_r, int k, std::string_view measure,
                 double value) {
  t.rows.push_back({std::string(state), std::to_string(n), std::to_string(n_r),
                    std::to_string(k), std::string(measure), fmt(value)});
}

// --- commands ---------------------------------------------------------------

Table cmd_entropy_splits(const SweepConfig& cfg) {
  require_states(cfg);
  Table table = measure_table();
  const auto inst = instances(cfg);
  run_blocks(table, inst.size(), cfg.jobs, [&](std::size_t i, Table& out) {
    const auto loaded = load_state(*inst[i].src, inst[i].n);
    const SymKet& psi = require_ket(loaded, cfg.command);
    const int n = psi.n();
    const std::string label = inst[i].src->to_string();
    for (int k = 1; k <= n / 2; ++k) {
      add_measure(out, label, n, n, k, "entropy", entropy_of_entanglement(psi, k));
      add_measure(out, label, n, n, k, "unobtainable_bound", std::log2(k + 1.0));
    }
  });
  return table;
}

Table cmd_entropy_vs_n(const SweepConfig& cfg) {
  require_states(cfg);
  Table table = measure_table();
  const auto sizes = cfg.sizes();
  for (const auto& src : cfg.states) {
    const auto* spec = std::get_if<StateSpec>(&src.what);
    const bool averaged = spec && spec->family == Family::random && !cfg.seeds.empty();
    if (!averaged) {
      const auto inst_sizes = src.is_file() ? std::vector<int>{0} : sizes;
      run_blocks(table, inst_sizes.size(), cfg.jobs, [&](std::size_t i, Table& out) {
        const auto loaded = load_state(src, inst_sizes[i]);
        const SymKet& psi = require_ket(loaded, cfg.command);
        const int n = psi.n();
        const double e = even_split_entropy(psi);
        add_measure(out, src.to_string(), n, n, n / 2, "entropy", e);
        add_measure(out, src.to_string(), n, n, n / 2, "bound_gap",
                    std::log2(n / 2 + 1.0) - e);
      });
      continue;
    }
    // Random family with a seed list: one row per seed, then the mean.
    const std::size_t per_n = cfg.seeds.size();
    std::vector<double> values(sizes.size() * per_n);
    parallel_for(values.size(), cfg.jobs, [&](std::size_t i) {
      values[i] = even_split_entropy(make_random(sizes[i / per_n], cfg.seeds[i % per_n]));
    });
    for (std::size_t a = 0; a < sizes.size(); ++a) {
      const int n = sizes[a];
      double sum = 0;
      for (std::size_t b = 0; b < per_n; ++b) {
        const double e = values[a * per_n + b];
        sum += e;
        add_measure(table, "random:" + std::to_string(cfg.seeds[b]), n, n, n / 2, "entropy", e);
      }
      const double mean = sum / static_cast<double>(per_n);
      const std::string label = "random:mean" + std::to_string(per_n);
      add_measure(table, label, n, n, n / 2, "entropy", mean);
      add_measure(table, label, n, n, n / 2, "bound_gap", std::log2(n / 2 + 1.0) - mean);
    }
  }
  return table;
}

Table cmd_pair_formation(const SweepConfig& cfg) {
  require_states(cfg);
  Table table = measure_table();
  const auto inst = instances(cfg);
  run_blocks(table, inst.size(), cfg.jobs, [&](std::size_t i, Table& out) {
    const auto loaded = load_state(*inst[i].src, inst[i].n);
    const int n = state_n(loaded);
    if (n < 2) throw ConfigError("pair-formation: need N >= 2");
    const SymDensity rho2 = reduce_to(as_density(loaded), 2);
    const std::string label = inst[i].src->to_string();
    add_measure(out, label, n, 2, 1, "concurrence", concurrence_pair(rho2));
    add_measure(out, label, n, 2, 1, "ef_pair", eof_pair(rho2));
  });
  return table;
}

Table cmd_extremal_scatter(const SweepConfig& cfg) {
  std::vector<StateSource> refs = cfg.states;
  if (refs.empty()) {
    for (const char* s : {"polarized", "ghz", "dicke:1", "dicke:half", "comb:auto", "random:1"}) {
      refs.push_back(StateSource::parse(s));
    }
  }
  Table table = measure_table();
  for (int n : cfg.sizes()) {
    if (n < 4) throw ConfigError("extremal-scatter: need N >= 4");
    std::vector<std::pair<std::string, SymKet>> states;
    for (const auto& src : refs) {
      const auto loaded = load_state(src, n);
      states.emplace_back(src.to_string(), require_ket(loaded, cfg.command));
    }
    const SymKet comb = make_comb(n, optimal_comb_spacing(n));
    for (int i = 0; i < kInterpolationPoints; ++i) {
      const double p = static_cast<double>(i) / (kInterpolationPoints - 1);
      const double c = std::cos(p * std::numbers::pi / 2), s = std::sin(p * std::numbers::pi / 2);
      CVector a = CVector::Zero(n + 1);
      a(0) = c;
      a(1) = s;
      states.emplace_back("interp:0-1:" + fmt(p), SymKet(n, a));
      CVector b = s * comb.amps();
      b(n / 2) += c;
      states.emplace_back("interp:half-comb:" + fmt(p), SymKet(n, b));
    }
    const Trajectory traj = run_trajectory(n, cfg.hamiltonian, cfg.t_max, cfg.steps);
    for (std::size_t i = 0; i < traj.kets.size(); ++i) {
      states.emplace_back("squeeze:t=" + fmt(traj.times[i]), traj.kets[i]);
    }
    run_blocks(table, states.size(), cfg.jobs, [&](std::size_t i, Table& out) {
      const auto& [label, psi] = states[i];
      add_measure(out, label, n, n, n / 2, "ef_even", even_split_entropy(psi));
      add_measure(out, label, n, 2, 1, "ef_pair", pair_formation(psi));
    });
  }
  return table;
}

Table cmd_negativity_reduced(const SweepConfig& cfg) {
  require_states(cfg);
  Table table = measure_table();
  for (const auto& inst : instances(cfg)) {
    const auto loaded = load_state(*inst.src, inst.n);
    const int n = state_n(loaded);
    if (n > kNegativityMaxN) throw ConfigError("negativity-reduced: N over cap");
    if (n < 2) throw ConfigError("negativity-reduced: need N >= 2");
    const std::string label = inst.src->to_string();
    run_blocks(table, static_cast<std::size_t>(n - 1), cfg.jobs, [&](std::size_t i, Table& out) {
      const int n_r = static_cast<int>(i) + 2;
      double en = 0;
      if (const auto* psi = std::get_if<SymKet>(&loaded)) {
        en = even_split_log_negativity(*psi, n_r);
      } else {
        en = log_negativity(reduce_to(std::get<SymDensity>(loaded), n_r), n_r / 2);
      }
      add_measure(out, label, n, n_r, n_r / 2, "log_negativity", en);
    });
  }
  return table;
}

Table cmd_dicke_ordering(const SweepConfig& cfg) {
  Table table = measure_table();
  if (cfg.n > 0) {
    const int n = cfg.n;
    if (n < 2) throw ConfigError("dicke-ordering: need N >= 2");
    run_blocks(table, static_cast<std::size_t>(n / 2), cfg.jobs, [&](std::size_t i, Table& out) {
      const int m = static_cast<int>(i) + 1;
      const SymDensity rho2 = reduce_to(make_dicke(n, m), 2);
      const std::string label = "dicke:" + std::to_string(m);
      add_measure(out, label, n, 2, 1, "ef_pair", eof_pair(rho2));
      add_measure(out, label, n, 2, 1, "en_pair", pair_en(rho2));
    });
  }
  run_blocks(table, cfg.n_list.size(), cfg.jobs, [&](std::size_t i, Table& out) {
    const int n = cfg.n_list[i];
    if (n < 2) throw ConfigError("dicke-ordering: need N >= 2");
    const SymDensity rho2 = reduce_to(make_dicke(n, 1), 2);
    const double n2 = static_cast<double>(n) * n;
    add_measure(out, "dicke:1", n, 2, 1, "n2_ef_pair", n2 * eof_pair(rho2));
    add_measure(out, "dicke:1", n, 2, 1, "n2_en_pair", n2 * pair_en(rho2));
  });
  return table;
}

std::vector<Table> cmd_squeeze(const SweepConfig& cfg) {
  const int n = cfg.n;
  TrajectoryOptions opts;
  opts.formation = true;
  opts.negativity_nr = cfg.splits;
  opts.jobs = cfg.jobs;
  const Trajectory traj = run_trajectory(n, cfg.hamiltonian, cfg.t_max, cfg.steps, opts);

  const bool twist = cfg.hamiltonian == HamiltonianKind::twist;
  Table tr;
  tr.header = {"t_scaled", "xi2", "jz_mean", "ef_11", "ef_even"};
  for (int nr : cfg.splits) tr.header.push_back("en_split_" + std::to_string(nr));
  if (twist) tr.header.push_back("ghz_distance");
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    std::vector<std::string> row{fmt(traj.times[i])};
    if (const auto& rec = traj.records[i]) {
      row.push_back(fmt(rec->xi2));
      row.push_back(fmt(rec->jz_mean));
    } else {
      row.push_back("nan");
      row.push_back(fmt(collective_moments(traj.kets[i]).jz_mean));
    }
    row.push_back(fmt(traj.measures.ef_pair[i]));
    row.push_back(fmt(traj.measures.ef_even[i]));
    for (int nr : cfg.splits) row.push_back(fmt(traj.measures.en_even.at(nr)[i]));
    if (twist) row.push_back(fmt(ghz_distance(traj.kets[i])));
    tr.rows.push_back(std::move(row));
  }
  std::vector<Table> out{std::move(tr)};
  if (!cfg.loss) return out;

  // Particle loss from the optimally squeezed state (scaled t = 1).
  const SymKet psi = Propagator(build_hamiltonian(n, cfg.hamiltonian))
                         .evolve(make_polarized(n), traj.t_star);
  const SqueezingRecord full = squeezing_parameter(psi);
  Table loss;
  loss.header = {"n_r", "xi2_formula", "xi2_direct", "rel_diff"};
  run_blocks(loss, static_cast<std::size_t>(n - 1), cfg.jobs, [&](std::size_t i, Table& t) {
    const int n_r = static_cast<int>(i) + 2;
    const double line = squeezing_after_loss(full, n, n_r);
    const double direct = squeezing_parameter(reduce_to(psi, n_r)).xi2;
    t.rows.push_back(
        {std::to_string(n_r), fmt(line), fmt(direct), fmt(std::abs(direct - line) / line)});
  });
  out.push_back(std::move(loss));
  return out;
}

// --- oracle -----------------------------------------------------------------

double OracleDeviation::max() const {
  return std::max({partial_trace, transpose_spectrum, schmidt, evolution});
}

OracleDeviation oracle_deviation(const SymKet& psi, HamiltonianKind kind, double t) {
  const int n = psi.n();
  if (n < 2 || n > oracle::kMaxEvolveSpins) {
    throw DomainError("oracle_deviation: need 2 <= n <= " +
                      std::to_string(oracle::kMaxEvolveSpins));
  }
  OracleDeviation dev;
  const SymDensity rho = psi.density();
  const oracle::FullKet phi = oracle::lift(psi);
  const oracle::FullDensity full = oracle::FullDensity::from_ket(phi);
  const Eigen::Index dim = Eigen::Index{1} << n;

  for (int k = 1; k < n; ++k) {
    const auto subset = oracle::first_spins(k);

    const CMatrix reduced = oracle::lift(partial_trace(rho, k)).mat();
    const CMatrix ref = oracle::full_partial_trace(full, subset).mat();
    dev.partial_trace = std::max(dev.partial_trace, (reduced - ref).cwiseAbs().maxCoeff());

    RVector sym = RVector::Zero(dim);
    const RVector ev = hermitian_eigenvalues(partial_transpose(rho, k).mat());
    sym.head(ev.size()) = ev;
    RVector fev = hermitian_eigenvalues(oracle::full_partial_transpose(full, subset).mat());
    std::sort(sym.begin(), sym.end());
    std::sort(fev.begin(), fev.end());
    dev.transpose_spectrum = std::max(dev.transpose_spectrum, (sym - fev).cwiseAbs().maxCoeff());

    const RVector sv = schmidt_values(psi, k);
    const RVector fsv = oracle::full_schmidt_values(phi, subset);
    RVector padded = RVector::Zero(fsv.size());
    padded.head(std::min(sv.size(), fsv.size())) = sv.head(std::min(sv.size(), fsv.size()));
    dev.schmidt = std::max(dev.schmidt, (padded - fsv).cwiseAbs().maxCoeff());
  }

  const SymKet evolved = propagate(psi, build_hamiltonian(n, kind), t);
  const oracle::FullKet ref = oracle::full_evolve(phi, kind, t);
  dev.evolution = (oracle::lift(evolved).amps() - ref.amps()).cwiseAbs().maxCoeff();
  return dev;
}

Table cmd_oracle_check(const SweepConfig& cfg) {
  std::vector<int> sizes;
  if (cfg.n == 0 && cfg.n_list.empty()) {
    for (int n = 2; n <= oracle::kMaxEvolveSpins; ++n) sizes.push_back(n);
  } else {
    sizes = cfg.sizes();
  }
  std::vector<std::uint64_t> seeds = cfg.seeds;
  if (seeds.empty()) {
    for (int s = 1; s <= kDefaultOracleSeeds; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
  }
  Table table = measure_table();
  const std::size_t per_n = seeds.size();
  run_blocks(table, sizes.size() * per_n, cfg.jobs, [&](std::size_t i, Table& out) {
    const int n = sizes[i / per_n];
    const std::uint64_t seed = seeds[i % per_n];
    // Evolution time varies with the seed so the check covers more than one t.
    const double t = 0.05 + 0.1 * static_cast<double>(seed % 10);
    const OracleDeviation d = oracle_deviation(make_random(n, seed), cfg.hamiltonian, t);
    const std::string label = "random:" + std::to_string(seed);
    add_measure(out, label, n, n, 0, "dev_partial_trace", d.partial_trace);
    add_measure(out, label, n, n, 0, "dev_transpose_spectrum", d.transpose_spectrum);
    add_measure(out, label, n, n, 0, "dev_schmidt", d.schmidt);
    add_measure(out, label, n, n, 0, "dev_evolution", d.evolution);
  });
  return table;
}

bool oracle_check_passed(const Table& table, double tolerance) {
  for (const auto& row : table.rows) {
    if (row.size() == 6 && row[4].starts_with("dev_") && !(std::stod(row[5]) <= tolerance)) {
      return false;
    }
  }
  return true;
}

std::vector<Table> run_command(const SweepConfig& cfg) {
  validate(cfg);
  const std::string& c = cfg.command;
  if (c == "entropy-splits") return {cmd_entropy_splits(cfg)};
  if (c == "entropy-vs-n") return {cmd_entropy_vs_n(cfg)};
  if (c == "pair-formation") return {cmd_pair_formation(cfg)};
  if (c == "extremal-scatter") return {cmd_extremal_scatter(cfg)};
  if (c == "negativity-reduced") return {cmd_negativity_reduced(cfg)};
  if (c == "dicke-ordering") return {cmd_dicke_ordering(cfg)};
  if (c == "squeeze") return cmd_squeeze(cfg);
  return {cmd_oracle_check(cfg)};
}

}  // namespace symspin
