#pragma once

#include "symspin/types.hpp"

namespace symspin {

class SymDensity;

/// Pure permutation-symmetric state of n spin-1/2 particles in the Dicke
/// basis: amps[m] is the coefficient of the normalized state with m spins up.
class SymKet {
 public:
  /// Normalizes `amps`. Throws DomainError for n < 1 or a length other than
  /// n + 1, DataError for a zero (or non-finite) vector.
  SymKet(int n, CVector amps);

  int n() const { return n_; }
  const CVector& amps() const { return amps_; }
  cplx operator[](int m) const { return amps_(m); }

  SymDensity density() const;

 private:
  int n_;
  CVector amps_;
};

/// Mixed symmetric state: (n+1)x(n+1) Hermitian, unit trace, PSD.
class SymDensity {
 public:
  /// Validates Hermiticity, unit trace and positivity to tol::kState.
  SymDensity(int n, CMatrix mat);

  /// Skips validation; for results of trace-preserving transforms.
  static SymDensity trusted(int n, CMatrix mat);

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  const CMatrix& mat() const { return mat_; }

 private:
  struct TrustTag {};
  SymDensity(int n, CMatrix mat, TrustTag) : n_(n), mat_(std::move(mat)) {}

  int n_;
  CMatrix mat_;
};

/// Operator on S_{n_a} (x) S_{n_b}, composite index a * (n_b + 1) + c.
class SplitDensity {
 public:
  SplitDensity(int n_a, int n_b, CMatrix mat);

  int n_a() const { return n_a_; }
  int n_b() const { return n_b_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  const CMatrix& mat() const { return mat_; }

  static int index(int a, int c, int n_b) { return a * (n_b + 1) + c; }

 private:
  int n_a_;
  int n_b_;
  CMatrix mat_;
};

/// Bipartite split {k, remaining - k} of a pure state of `total_n` spins
/// after tracing out total_n - remaining of them.
struct Split {
  int total_n;
  int remaining;
  int k;

  Split(int total_n, int remaining, int k);

  /// {floor(n_r/2), ceil(n_r/2)} of `remaining` spins.
  static Split even(int total_n, int remaining);

  int traced() const { return total_n - remaining; }
  int other() const { return remaining - k; }
};

}  // namespace symspin
