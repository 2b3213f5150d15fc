#include "symspin/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "symspin/binomial.hpp"
#include "symspin/linalg.hpp"

namespace symspin::oracle {

namespace {

void check_spins(int n, int cap, const char* what) {
  if (n < 1 || n > cap) {
    throw DomainError(std::string(what) + ": full-space oracle supports 1 <= n <= " +
                      std::to_string(cap));
  }
}

void check_subset(int n, const std::vector<int>& subset) {
  if (subset.empty()) throw DomainError("oracle: empty spin subset");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.front() < 0 || sorted.back() >= n) {
    throw DomainError("oracle: spin indices must be distinct and in [0, n)");
  }
}

std::size_t dim_of(int n) { return std::size_t{1} << n; }

unsigned mask_of(const std::vector<int>& spins) {
  unsigned mask = 0;
  for (const int s : spins) mask |= 1u << s;
  return mask;
}

// Packs the bits of `b` selected by the sorted positions into a dense index.
unsigned gather_bits(unsigned b, const std::vector<int>& positions) {
  unsigned out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    out |= ((b >> positions[i]) & 1u) << i;
  }
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& subset) {
  std::vector<int> rest;
  for (int s = 0; s < n; ++s) {
    if (std::find(subset.begin(), subset.end(), s) == subset.end()) rest.push_back(s);
  }
  return rest;
}

}  // namespace

FullKet::FullKet(int n, CVector amps) : n_(n), amps_(std::move(amps)) {
  check_spins(n, kMaxKetSpins, "FullKet");
  if (amps_.size() != static_cast<Eigen::Index>(dim_of(n))) {
    throw DomainError("FullKet: expected 2^n amplitudes");
  }
  const double norm = amps_.norm();
  if (norm == 0.0 || !std::isfinite(norm)) throw DataError("FullKet: zero vector");
  amps_ /= norm;
}

FullDensity::FullDensity(int n, CMatrix mat) : n_(n), mat_(std::move(mat)) {
  check_spins(n, kMaxDensitySpins, "FullDensity");
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  if (mat_.rows() != d || mat_.cols() != d) throw DomainError("FullDensity: expected 2^n square");
  if (hermitian_defect(mat_) > tol::kState) throw DataError("FullDensity: not Hermitian");
  if (std::abs(mat_.trace() - cplx(1.0)) > tol::kState) throw DataError("FullDensity: trace != 1");
}

FullDensity FullDensity::from_ket(const FullKet& phi) {
  return FullDensity(phi.n(), phi.amps() * phi.amps().adjoint());
}

FullKet lift(const SymKet& psi) {
  const int n = psi.n();
  check_spins(n, kMaxKetSpins, "lift");
  CVector out(dim_of(n));
  for (std::size_t b = 0; b < dim_of(n); ++b) {
    const int m = std::popcount(static_cast<unsigned>(b));
    out(b) = psi[m] * binom_coeff(n, m);
  }
  return FullKet(n, std::move(out));
}

FullDensity lift(const SymDensity& rho) {
  const int n = rho.n();
  check_spins(n, kMaxDensitySpins, "lift");
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  CMatrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const int mr = std::popcount(static_cast<unsigned>(r));
    for (Eigen::Index c = 0; c < d; ++c) {
      const int mc = std::popcount(static_cast<unsigned>(c));
      out(r, c) = rho.mat()(mr, mc) * binom_coeff(n, mr) * binom_coeff(n, mc);
    }
  }
  return FullDensity(n, std::move(out));
}

CVector symmetrize(const FullKet& phi) {
  const int n = phi.n();
  CVector out = CVector::Zero(n + 1);
  for (std::size_t b = 0; b < dim_of(n); ++b) {
    const int m = std::popcount(static_cast<unsigned>(b));
    out(m) += binom_coeff(n, m) * phi.amps()(b);
  }
  return out;
}

CMatrix symmetrize(const FullDensity& rho) {
  const int n = rho.n();
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  CMatrix out = CMatrix::Zero(n + 1, n + 1);
  for (Eigen::Index r = 0; r < d; ++r) {
    const int mr = std::popcount(static_cast<unsigned>(r));
    for (Eigen::Index c = 0; c < d; ++c) {
      const int mc = std::popcount(static_cast<unsigned>(c));
      out(mr, mc) += binom_coeff(n, mr) * binom_coeff(n, mc) * rho.mat()(r, c);
    }
  }
  return out;
}

SymKet project(const FullKet& phi) { return SymKet(phi.n(), symmetrize(phi)); }

SymDensity project(const FullDensity& rho) {
  CMatrix s = symmetrize(rho);
  const cplx tr = s.trace();
  if (std::abs(tr) < 1e-14) throw DataError("project: state has no symmetric component");
  s /= tr;
  return SymDensity(rho.n(), std::move(s));
}

FullDensity full_partial_trace(const FullDensity& rho, const std::vector<int>& subset) {
  const int n = rho.n();
  check_subset(n, subset);
  if (static_cast<int>(subset.size()) >= n) throw DomainError("full_partial_trace: nothing remains");
  std::vector<int> traced = subset;
  std::sort(traced.begin(), traced.end());
  const std::vector<int> kept = complement(n, traced);
  const auto dk = static_cast<Eigen::Index>(dim_of(static_cast<int>(kept.size())));
  CMatrix out = CMatrix::Zero(dk, dk);
  const unsigned traced_mask = mask_of(traced);
  const auto d = dim_of(n);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & traced_mask) != (c & traced_mask)) continue;
      out(gather_bits(static_cast<unsigned>(r), kept), gather_bits(static_cast<unsigned>(c), kept)) +=
          rho.mat()(r, c);
    }
  }
  return FullDensity(static_cast<int>(kept.size()), std::move(out));
}

FullDensity full_partial_transpose(const FullDensity& rho, const std::vector<int>& subset) {
  const int n = rho.n();
  check_subset(n, subset);
  const unsigned mask = mask_of(subset);
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  CMatrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const unsigned ur = static_cast<unsigned>(r), uc = static_cast<unsigned>(c);
      const unsigned r2 = (ur & ~mask) | (uc & mask);
      const unsigned c2 = (uc & ~mask) | (ur & mask);
      out(r, c) = rho.mat()(r2, c2);
    }
  }
  return FullDensity(n, std::move(out));
}

RVector full_schmidt_values(const FullKet& phi, const std::vector<int>& subset) {
  const int n = phi.n();
  check_subset(n, subset);
  std::vector<int> side_b = subset;
  std::sort(side_b.begin(), side_b.end());
  const std::vector<int> side_a = complement(n, side_b);
  CMatrix c = CMatrix::Zero(dim_of(static_cast<int>(side_a.size())),
                            dim_of(static_cast<int>(side_b.size())));
  for (std::size_t b = 0; b < dim_of(n); ++b) {
    const unsigned ub = static_cast<unsigned>(b);
    c(gather_bits(ub, side_a), gather_bits(ub, side_b)) = phi.amps()(b);
  }
  RVector s = Eigen::BDCSVD<CMatrix>(c).singularValues();
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

CMatrix full_hamiltonian(int n, HamiltonianKind kind) {
  check_spins(n, kMaxEvolveSpins, "full_hamiltonian");
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  const cplx i(0.0, 1.0);
  CMatrix jx = CMatrix::Zero(d, d), jy = CMatrix::Zero(d, d), jz = CMatrix::Zero(d, d);
  for (int s = 0; s < n; ++s) {
    const unsigned bit = 1u << s;
    for (Eigen::Index b = 0; b < d; ++b) {
      const unsigned ub = static_cast<unsigned>(b);
      const bool up = ub & bit;
      const Eigen::Index flipped = ub ^ bit;
      // sigma_x/2, sigma_y/2, sigma_z/2 on spin s; |1> = up.
      jx(flipped, b) += 0.5;
      jy(flipped, b) += up ? 0.5 * i : -0.5 * i;
      jz(b, b) += up ? 0.5 : -0.5;
    }
  }
  switch (kind) {
    case HamiltonianKind::counter_twist: {
      const CMatrix jp = jx + i * jy;
      const CMatrix jm = jx - i * jy;
      return (jp * jp - jm * jm) / i;
    }
    case HamiltonianKind::twist: return jx * jx;
    case HamiltonianKind::jx: return jx;
    case HamiltonianKind::jy: return jy;
    case HamiltonianKind::jz: return jz;
  }
  throw DomainError("full_hamiltonian: unknown kind");
}

FullKet full_evolve(const FullKet& phi, HamiltonianKind kind, double t) {
  const CMatrix h = full_hamiltonian(phi.n(), kind);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  CVector coeff = es.eigenvectors().adjoint() * phi.amps();
  for (Eigen::Index j = 0; j < coeff.size(); ++j) {
    coeff(j) *= std::polar(1.0, -es.eigenvalues()(j) * t);
  }
  return FullKet(phi.n(), es.eigenvectors() * coeff);
}

std::vector<int> first_spins(int k) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace symspin::oracle
