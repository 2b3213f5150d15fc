#include "symspin/sym_state.hpp"

#include <cmath>
#include <string>

#include "symspin/linalg.hpp"

namespace symspin {

SymKet::SymKet(int n, CVector amps) : n_(n), amps_(std::move(amps)) {
  if (n < 1) throw DomainError("SymKet: n must be >= 1");
  if (amps_.size() != n + 1) {
    throw DomainError("SymKet: expected " + std::to_string(n + 1) +
                      " amplitudes, got " + std::to_string(amps_.size()));
  }
  const double norm = amps_.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    throw DataError("SymKet: amplitude vector cannot be normalized");
  }
  amps_ /= norm;
}

SymDensity SymKet::density() const {
  return SymDensity::trusted(n_, amps_ * amps_.adjoint());
}

SymDensity::SymDensity(int n, CMatrix mat) : n_(n), mat_(std::move(mat)) {
  if (n < 1) throw DomainError("SymDensity: n must be >= 1");
  if (mat_.rows() != n + 1 || mat_.cols() != n + 1) {
    throw DomainError("SymDensity: matrix must be (n+1)x(n+1)");
  }
  if (hermitian_defect(mat_) > tol::kState) {
    throw DataError("SymDensity: matrix is not Hermitian");
  }
  if (std::abs(mat_.trace() - cplx(1.0)) > tol::kState) {
    throw DataError("SymDensity: trace is not 1");
  }
  if (hermitian_eigenvalues(mat_).minCoeff() < -tol::kState) {
    throw DataError("SymDensity: matrix is not positive semidefinite");
  }
}

SymDensity SymDensity::trusted(int n, CMatrix mat) {
  return SymDensity(n, std::move(mat), TrustTag{});
}

SplitDensity::SplitDensity(int n_a, int n_b, CMatrix mat)
    : n_a_(n_a), n_b_(n_b), mat_(std::move(mat)) {
  if (n_a < 0 || n_b < 0) throw DomainError("SplitDensity: negative side");
  const auto d = static_cast<Eigen::Index>(n_a + 1) * (n_b + 1);
  if (mat_.rows() != d || mat_.cols() != d) {
    throw DomainError("SplitDensity: matrix must be (n_a+1)(n_b+1) square");
  }
}

Split::Split(int total_n_, int remaining_, int k_)
    : total_n(total_n_), remaining(remaining_), k(k_) {
  if (remaining < 2 || remaining > total_n) {
    throw DomainError("Split: need 2 <= remaining <= total_n");
  }
  if (k < 1 || k > remaining - 1) {
    throw DomainError("Split: need 1 <= k <= remaining - 1");
  }
}

Split Split::even(int total_n, int remaining) {
  return Split(total_n, remaining, remaining / 2);
}

}  // namespace symspin
