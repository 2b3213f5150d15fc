#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symspin/dynamics.hpp"
#include "symspin/states.hpp"
#include "symspin/sym_state.hpp"

namespace symspin {

inline constexpr std::string_view kToolVersion = "symspin 1.0.0";

/// Negativity sweeps solve dense (k+1)(N-k+1) eigenproblems; cap N.
inline constexpr int kNegativityMaxN = 100;

/// Thrown for bad command-line / sweep configuration (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One `--state` entry: a reference family or a CSV file (`file:<path>`).
struct StateSource {
  std::variant<StateSpec, std::string> what;

  static StateSource parse(std::string_view text);
  std::string to_string() const;
  bool is_file() const { return what.index() == 1; }

  bool operator==(const StateSource&) const = default;
};

/// Pure state or density matrix loaded for a given N. Files carry their own N.
using LoadedState = std::variant<SymKet, SymDensity>;
LoadedState load_state(const StateSource& src, int n);

struct SweepConfig {
  std::string command;
  std::vector<StateSource> states;
  int n = 0;                       // 0 = unset
  std::vector<int> n_list;
  std::vector<int> splits;         // command dependent: k or n_r values
  double t_max = 2.0;              // scaled time
  int steps = 201;
  std::vector<std::uint64_t> seeds;
  HamiltonianKind hamiltonian = HamiltonianKind::counter_twist;
  bool loss = false;
  double tolerance = 1e-9;         // oracle-check threshold
  // Not part of the canonical form: they never change the output.
  std::string out;
  int jobs = 1;

  /// `key=value` pairs joined by ';' in fixed key order.
  std::string to_canonical() const;
  static SweepConfig parse_canonical(std::string_view text);

  /// n-list if given, else {n}; throws ConfigError if neither is set.
  std::vector<int> sizes() const;

  bool operator==(const SweepConfig&) const = default;
};

/// Rejects inconsistent configurations before any computation.
void validate(const SweepConfig& cfg);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// `# <tool version> | config=<canonical> | rng=<name>`
std::string metadata_line(const SweepConfig& cfg);
void write_table(std::ostream& out, const Table& table, const SweepConfig& cfg);

/// Long-format measure table: state_spec, n, n_r, k, measure_name, value.
Table measure_table();
void add_measure(Table& t, std::string_view state, int n, int n_r, int k, std::string_view measure,
                 double value);

Table cmd_entropy_splits(const SweepConfig& cfg);
Table cmd_entropy_vs_n(const SweepConfig& cfg);
Table cmd_pair_formation(const SweepConfig& cfg);
Table cmd_extremal_scatter(const SweepConfig& cfg);
Table cmd_negativity_reduced(const SweepConfig& cfg);
Table cmd_dicke_ordering(const SweepConfig& cfg);

/// Trajectory table, plus the particle-loss table when cfg.loss is set.
std::vector<Table> cmd_squeeze(const SweepConfig& cfg);

/// Maximum deviations between symmetric-subspace transforms and the 2^N
/// oracle for one state (all splits) and one evolution time.
struct OracleDeviation {
  double partial_trace = 0;
  double transpose_spectrum = 0;
  double schmidt = 0;
  double evolution = 0;
  double max() const;
};
OracleDeviation oracle_deviation(const SymKet& psi, HamiltonianKind kind, double t);

/// Rows per (N, seed); oracle_check_passed compares against cfg.tolerance.
Table cmd_oracle_check(const SweepConfig& cfg);
bool oracle_check_passed(const Table& table, double tolerance);

/// Dispatches on cfg.command. Returns the tables to write in order.
std::vector<Table> run_command(const SweepConfig& cfg);

}  // namespace symspin
