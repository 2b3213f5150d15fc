#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "symspin/linalg.hpp"
#include "symspin/measures.hpp"
#include "symspin/sym_state.hpp"

namespace symspin {

enum class HamiltonianKind { counter_twist, twist, jx, jy, jz };

HamiltonianKind parse_hamiltonian_kind(std::string_view name);
std::string_view to_string(HamiltonianKind kind);

/// Collective operator of the J = n/2 pseudo-spin on the (n+1)-dim basis.
struct Hamiltonian {
  int n;
  HamiltonianKind kind;
  CMatrix mat;
};

/// J+ on the Dicke basis: J+|m> = sqrt((n-m)(m+1)) |m+1>.
RMatrix raising_operator(int n);

/// counter_twist = (J+^2 - J-^2)/i, twist = Jx^2, or a single component.
Hamiltonian build_hamiltonian(int n, HamiltonianKind kind);

/// exp(-i H t) applied through a one-time eigendecomposition of H.
class Propagator {
 public:
  explicit Propagator(const Hamiltonian& h);

  int n() const { return n_; }
  SymKet evolve(const SymKet& psi0, double t) const;

 private:
  int n_;
  HermitianEigen eig_;
};

SymKet propagate(const SymKet& psi0, const Hamiltonian& h, double t);

/// Time that minimizes the squeezing parameter of |0> (all spins down)
/// under `kind`. Coarse grid on [0, 1.5 log2(N)/N], then golden-section
/// search to relative tolerance 1e-4. Throws NumericalError when the grid
/// minimum sits on the boundary.
double find_optimal_time(int n, HamiltonianKind kind = HamiltonianKind::counter_twist);

/// Entanglement measures evaluated along a trajectory.
struct MeasureSweep {
  std::vector<double> ef_pair;   // E_F over {1,1}
  std::vector<double> ef_even;   // E_F = entropy over {N/2, N/2}
  std::map<int, std::vector<double>> en_even;  // keyed by n_r
};

struct TrajectoryOptions {
  bool formation = false;          // fill ef_pair / ef_even
  std::vector<int> negativity_nr;  // n_r values for even-split E_N
  int jobs = 1;
};

struct Trajectory {
  int n = 0;
  HamiltonianKind kind = HamiltonianKind::counter_twist;
  double t_star = 0;                 // unscaled optimal squeezing time
  std::vector<double> times;         // scaled, t / t_star
  std::vector<SymKet> kets;
  std::vector<std::optional<SqueezingRecord>> records;  // empty if <Jz> ~ 0
  MeasureSweep measures;
};

/// Evolves |0> under `kind` and samples it at the given scaled times.
Trajectory sample_trajectory(int n, HamiltonianKind kind, std::span<const double> scaled_times,
                             const TrajectoryOptions& options = {});

/// Uniform samples on [0, t_max_scaled], `steps` >= 2 samples inclusive.
Trajectory run_trajectory(int n, HamiltonianKind kind, double t_max_scaled, int steps,
                          const TrajectoryOptions& options = {});

/// Time of the first local maximum of a sampled curve, refined by the
/// stationary point of the cubic through the neighbouring samples. Returns
/// the last time when the curve has no interior maximum.
double first_peak_time(std::span<const double> times, std::span<const double> values);

/// Period of the entanglement dynamics under the twist Hamiltonian Jx^2:
/// exp(-i pi Jx^2) is a collective rotation (even N) or a global phase
/// (odd N), so the period is pi for every N.
double twist_entanglement_period();

}  // namespace symspin
