#pragma once

#include <vector>

namespace symspin {

/// Natural-log binomial coefficients log C(n, m) for 0 <= m <= n <= n_max.
///
/// Stored as a log-factorial table; every binomial ratio in the symmetric
/// subspace transforms is formed as a sum of these logs and exponentiated
/// once, so nothing overflows at N in the thousands.
class BinomTable {
 public:
  explicit BinomTable(int n_max);

  int n_max() const { return n_max_; }

  double log_factorial(int n) const;
  double log_binom(int n, int m) const;

  /// C_{n,m} = binom(n, m)^{-1/2}.
  double coeff(int n, int m) const;

  /// log[C(n-k, i) C(k, j) / C(n, i+j)], summed before rounding to double.
  double log_hypergeom(int n, int k, int i, int j) const;

 private:
  void check(int n, int m) const;
  long double log_binom_ld(int n, int m) const;

  int n_max_;
  // long double: lgamma(N+1) ~ 1e3-1e4, and the ratios cancel.
  std::vector<long double> log_fact_;
};

/// Process-wide table, built once on first use and read-only afterwards.
const BinomTable& binom_table();

/// C_{n,m} = binom(n, m)^{-1/2} from the shared table.
double binom_coeff(int n, int m);

}  // namespace symspin
