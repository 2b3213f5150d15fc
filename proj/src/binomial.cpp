#include "symspin/binomial.hpp"

#include <cmath>
#include <string>

#include "symspin/types.hpp"

namespace symspin {

namespace {
constexpr int kSharedTableSize = 1 << 14;
}

BinomTable::BinomTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw DomainError("BinomTable: negative n_max");
  log_fact_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    log_fact_[n] = std::lgamma(static_cast<long double>(n) + 1.0L);
  }
}

void BinomTable::check(int n, int m) const {
  if (n < 0 || n > n_max_ || m < 0 || m > n) {
    throw DomainError("binomial index out of range: n=" + std::to_string(n) +
                      " m=" + std::to_string(m) +
                      " n_max=" + std::to_string(n_max_));
  }
}

double BinomTable::log_factorial(int n) const {
  check(n, 0);
  return static_cast<double>(log_fact_[n]);
}

long double BinomTable::log_binom_ld(int n, int m) const {
  check(n, m);
  if (m == 0 || m == n) return 0.0L;
  return log_fact_[n] - log_fact_[m] - log_fact_[n - m];
}

double BinomTable::log_binom(int n, int m) const { return static_cast<double>(log_binom_ld(n, m)); }

double BinomTable::log_hypergeom(int n, int k, int i, int j) const {
  return static_cast<double>(log_binom_ld(n - k, i) + log_binom_ld(k, j) - log_binom_ld(n, i + j));
}

double BinomTable::coeff(int n, int m) const {
  return std::exp(-0.5 * log_binom(n, m));
}

const BinomTable& binom_table() {
  static const BinomTable table(kSharedTableSize);
  return table;
}

double binom_coeff(int n, int m) { return binom_table().coeff(n, m); }

}  // namespace symspin
