#include "symspin/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "symspin/parallel.hpp"
#include "symspin/states.hpp"
#include "symspin/symcore.hpp"

namespace symspin {

HamiltonianKind parse_hamiltonian_kind(std::string_view name) {
  if (name == "counter_twist" || name == "counter-twist") return HamiltonianKind::counter_twist;
  if (name == "twist") return HamiltonianKind::twist;
  if (name == "jx") return HamiltonianKind::jx;
  if (name == "jy") return HamiltonianKind::jy;
  if (name == "jz") return HamiltonianKind::jz;
  throw DomainError("unknown Hamiltonian kind '" + std::string(name) + "'");
}

std::string_view to_string(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::counter_twist: return "counter_twist";
    case HamiltonianKind::twist: return "twist";
    case HamiltonianKind::jx: return "jx";
    case HamiltonianKind::jy: return "jy";
    case HamiltonianKind::jz: return "jz";
  }
  return "?";
}

RMatrix raising_operator(int n) {
  if (n < 1) throw DomainError("raising_operator: need n >= 1");
  RMatrix jp = RMatrix::Zero(n + 1, n + 1);
  for (int m = 0; m < n; ++m) {
    jp(m + 1, m) = std::sqrt(static_cast<double>(n - m) * (m + 1));
  }
  return jp;
}

Hamiltonian build_hamiltonian(int n, HamiltonianKind kind) {
  const CMatrix jp = raising_operator(n).cast<cplx>();
  const CMatrix jm = jp.adjoint();
  const cplx i(0.0, 1.0);
  CMatrix h;
  switch (kind) {
    case HamiltonianKind::counter_twist:
      h = (jp * jp - jm * jm) / i;
      break;
    case HamiltonianKind::twist: {
      const CMatrix jx = 0.5 * (jp + jm);
      h = jx * jx;
      break;
    }
    case HamiltonianKind::jx:
      h = 0.5 * (jp + jm);
      break;
    case HamiltonianKind::jy:
      h = (jp - jm) / (2.0 * i);
      break;
    case HamiltonianKind::jz:
      h = CMatrix::Zero(n + 1, n + 1);
      for (int m = 0; m <= n; ++m) h(m, m) = m - n / 2.0;
      break;
  }
  return Hamiltonian{n, kind, std::move(h)};
}

Propagator::Propagator(const Hamiltonian& h) : n_(h.n), eig_(hermitian_eigensystem(h.mat)) {}

SymKet Propagator::evolve(const SymKet& psi0, double t) const {
  if (psi0.n() != n_) throw DomainError("propagate: dimension mismatch");
  CVector coeff = eig_.vectors.adjoint() * psi0.amps();
  for (Eigen::Index j = 0; j < coeff.size(); ++j) {
    coeff(j) *= std::polar(1.0, -eig_.values(j) * t);
  }
  return SymKet(n_, eig_.vectors * coeff);
}

SymKet propagate(const SymKet& psi0, const Hamiltonian& h, double t) {
  return Propagator(h).evolve(psi0, t);
}

namespace {

double squeezing_or_inf(const Propagator& prop, const SymKet& psi0, double t) {
  try {
    return squeezing_parameter(prop.evolve(psi0, t)).xi2;
  } catch (const NumericalError&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

double find_optimal_time(int n, HamiltonianKind kind) {
  if (n < 4) throw DomainError("find_optimal_time: need n >= 4");
  const Propagator prop(build_hamiltonian(n, kind));
  const SymKet psi0 = make_polarized(n);
  auto xi2 = [&](double t) { return squeezing_or_inf(prop, psi0, t); };

  constexpr int kGrid = 240;
  const double t_hi = 1.5 * std::log2(static_cast<double>(n)) / n;
  const double dt = t_hi / kGrid;
  int best = 0;
  const double start = xi2(0.0);
  double best_val = start, worst_val = start;
  for (int i = 1; i <= kGrid; ++i) {
    const double v = xi2(i * dt);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
    worst_val = std::max(worst_val, v);
  }
  // A flat curve (e.g. a Hamiltonian the initial state is an eigenstate of)
  // has no minimum, only round-off.
  const bool flat = std::isfinite(worst_val) && worst_val - best_val <= 1e-9 * std::abs(worst_val);
  if (flat || best == 0 || best == kGrid) {
    throw NumericalError("find_optimal_time: squeezing minimum not bracketed on grid");
  }

  // Golden-section search on the bracketing grid cells.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = (best - 1) * dt;
  double b = (best + 1) * dt;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = xi2(c), fd = xi2(d);
  while (b - a > 1e-4 * 0.5 * (a + b)) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = xi2(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = xi2(d);
    }
  }
  return 0.5 * (a + b);
}

Trajectory sample_trajectory(int n, HamiltonianKind kind, std::span<const double> scaled_times,
                             const TrajectoryOptions& options) {
  Trajectory traj;
  traj.n = n;
  traj.kind = kind;
  traj.t_star = find_optimal_time(n, kind);
  traj.times.assign(scaled_times.begin(), scaled_times.end());

  for (const int n_r : options.negativity_nr) {
    if (n_r < 2 || n_r > n) throw DomainError("trajectory: negativity n_r out of range");
  }

  const Propagator prop(build_hamiltonian(n, kind));
  const SymKet psi0 = make_polarized(n);
  const std::size_t count = scaled_times.size();
  std::vector<std::optional<SymKet>> kets(count);
  traj.records.resize(count);
  MeasureSweep& sweep = traj.measures;
  if (options.formation) {
    sweep.ef_pair.resize(count);
    sweep.ef_even.resize(count);
  }
  for (const int n_r : options.negativity_nr) sweep.en_even[n_r].resize(count);

  parallel_for(count, options.jobs, [&](std::size_t i) {
    SymKet psi = prop.evolve(psi0, scaled_times[i] * traj.t_star);
    try {
      traj.records[i] = squeezing_parameter(psi);
    } catch (const NumericalError&) {
      traj.records[i].reset();
    }
    if (options.formation) {
      sweep.ef_pair[i] = pair_formation(psi);
      sweep.ef_even[i] = even_split_entropy(psi);
    }
    for (const int n_r : options.negativity_nr) {
      sweep.en_even[n_r][i] = even_split_log_negativity(psi, n_r);
    }
    kets[i].emplace(std::move(psi));
  });

  traj.kets.reserve(count);
  for (auto& k : kets) traj.kets.push_back(std::move(*k));
  return traj;
}

Trajectory run_trajectory(int n, HamiltonianKind kind, double t_max_scaled, int steps,
                          const TrajectoryOptions& options) {
  if (steps < 2) throw DomainError("run_trajectory: need steps >= 2");
  if (!(t_max_scaled > 0.0)) throw DomainError("run_trajectory: need t_max > 0");
  std::vector<double> times(steps);
  for (int i = 0; i < steps; ++i) times[i] = t_max_scaled * i / (steps - 1);
  return sample_trajectory(n, kind, times, options);
}

namespace {

// Stationary point of the cubic through four samples that maximizes it on
// [lo, hi].
double cubic_argmax(const std::array<double, 4>& x, const std::array<double, 4>& y,
                    double lo, double hi) {
  // Newton form coefficients, expanded to a monomial in s = t - x[0].
  const double d01 = (y[1] - y[0]) / (x[1] - x[0]);
  const double d12 = (y[2] - y[1]) / (x[2] - x[1]);
  const double d23 = (y[3] - y[2]) / (x[3] - x[2]);
  const double d012 = (d12 - d01) / (x[2] - x[0]);
  const double d123 = (d23 - d12) / (x[3] - x[1]);
  const double d0123 = (d123 - d012) / (x[3] - x[0]);
  const double a1 = x[1] - x[0], a2 = x[2] - x[0];
  // p(s) = y0 + d01 s + d012 s (s - a1) + d0123 s (s - a1)(s - a2)
  const double c3 = d0123;
  const double c2 = d012 - d0123 * (a1 + a2);
  const double c1 = d01 - d012 * a1 + d0123 * a1 * a2;
  auto eval = [&](double s) { return ((c3 * s + c2) * s + c1) * s + y[0]; };

  std::vector<double> candidates = {lo - x[0], hi - x[0]};
  const double qa = 3.0 * c3, qb = 2.0 * c2, qc = c1;
  if (std::abs(qa) > 1e-300) {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double r = std::sqrt(disc);
      candidates.push_back((-qb + r) / (2.0 * qa));
      candidates.push_back((-qb - r) / (2.0 * qa));
    }
  } else if (std::abs(qb) > 1e-300) {
    candidates.push_back(-qc / qb);
  }
  double best_s = candidates[0];
  double best_v = -std::numeric_limits<double>::infinity();
  for (const double s : candidates) {
    if (s < lo - x[0] || s > hi - x[0]) continue;
    const double v = eval(s);
    if (v > best_v) {
      best_v = v;
      best_s = s;
    }
  }
  return best_s + x[0];
}

}  // namespace

double first_peak_time(std::span<const double> times, std::span<const double> values) {
  if (times.size() != values.size() || times.size() < 2) {
    throw DomainError("first_peak_time: need matching samples, at least 2");
  }
  const std::size_t n = times.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (values[i] > values[i - 1] && values[i] >= values[i + 1]) {
      if (n < 4) return times[i];
      const std::size_t start = (i + 2 < n) ? i - 1 : i - 2;
      std::array<double, 4> x{}, y{};
      for (std::size_t j = 0; j < 4; ++j) {
        x[j] = times[start + j];
        y[j] = values[start + j];
      }
      return cubic_argmax(x, y, times[i - 1], times[i + 1]);
    }
  }
  return times.back();
}

double twist_entanglement_period() { return std::numbers::pi; }

}  // namespace symspin
