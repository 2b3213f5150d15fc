#include "symspin/symcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symspin {

namespace {

void check_split(int n, int k, const char* op) {
  if (k < 1 || k > n - 1) {
    throw DomainError(std::string(op) + ": need 1 <= k <= n-1 (n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

RMatrix split_amplitudes(int n, int k) {
  if (k < 0 || k > n) throw DomainError("split_amplitudes: need 0 <= k <= n");
  const BinomTable& t = binom_table();
  RMatrix h(n - k + 1, k + 1);
  for (int i = 0; i <= n - k; ++i) {
    for (int j = 0; j <= k; ++j) {
      h(i, j) = std::exp(0.5 * t.log_hypergeom(n, k, i, j));
    }
  }
  return h;
}

SymDensity partial_trace(const SymDensity& rho, int k) {
  const int n = rho.n();
  check_split(n, k, "partial_trace");
  const int d = n - k + 1;
  const RMatrix h = split_amplitudes(n, k);
  const CMatrix& r = rho.mat();
  CMatrix out = CMatrix::Zero(d, d);
  for (int j = 0; j <= k; ++j) {
    for (int b = 0; b < d; ++b) {
      const double hb = h(b, j);
      for (int a = 0; a < d; ++a) {
        out(a, b) += h(a, j) * hb * r(a + j, b + j);
      }
    }
  }
  return SymDensity::trusted(n - k, std::move(out));
}

SymDensity partial_trace(const SymKet& psi, int k) {
  check_split(psi.n(), k, "partial_trace");
  const CMatrix c = schmidt_matrix(psi, k);
  return SymDensity::trusted(psi.n() - k, c * c.adjoint());
}

SymDensity reduce_to(const SymDensity& rho, int remaining) {
  if (remaining < 1 || remaining > rho.n()) {
    throw DomainError("reduce_to: need 1 <= remaining <= n");
  }
  if (remaining == rho.n()) return rho;
  return partial_trace(rho, rho.n() - remaining);
}

SymDensity reduce_to(const SymKet& psi, int remaining) {
  if (remaining < 1 || remaining > psi.n()) {
    throw DomainError("reduce_to: need 1 <= remaining <= n");
  }
  if (remaining == psi.n()) return psi.density();
  return partial_trace(psi, psi.n() - remaining);
}

SplitDensity embed_split(const SymDensity& rho, int k) {
  const int n = rho.n();
  check_split(n, k, "embed_split");
  const RMatrix h = split_amplitudes(n, k);
  const CMatrix& r = rho.mat();
  const int da = n - k + 1;
  const int db = k + 1;
  CMatrix out(da * db, da * db);
  for (int a = 0; a < da; ++a) {
    for (int c = 0; c < db; ++c) {
      const double hac = h(a, c);
      for (int b = 0; b < da; ++b) {
        for (int d = 0; d < db; ++d) {
          out(a * db + c, b * db + d) = hac * h(b, d) * r(a + c, b + d);
        }
      }
    }
  }
  return SplitDensity(n - k, k, std::move(out));
}

SplitDensity partial_transpose(const SymDensity& rho, int k) {
  const int n = rho.n();
  check_split(n, k, "partial_transpose");
  const RMatrix h = split_amplitudes(n, k);
  const CMatrix& r = rho.mat();
  const int da = n - k + 1;
  const int db = k + 1;
  CMatrix out(da * db, da * db);
  for (int a = 0; a < da; ++a) {
    for (int c = 0; c < db; ++c) {
      for (int b = 0; b < da; ++b) {
        const double hbc = h(b, c);
        for (int d = 0; d < db; ++d) {
          out(a * db + c, b * db + d) = h(a, d) * hbc * r(a + d, b + c);
        }
      }
    }
  }
  return SplitDensity(n - k, k, std::move(out));
}

SplitDensity transpose_side_b(const SplitDensity& op) {
  const int da = op.n_a() + 1;
  const int db = op.n_b() + 1;
  const CMatrix& m = op.mat();
  CMatrix out(m.rows(), m.cols());
  for (int a = 0; a < da; ++a) {
    for (int c = 0; c < db; ++c) {
      for (int b = 0; b < da; ++b) {
        for (int d = 0; d < db; ++d) {
          out(a * db + c, b * db + d) = m(a * db + d, b * db + c);
        }
      }
    }
  }
  return SplitDensity(op.n_a(), op.n_b(), std::move(out));
}

CMatrix schmidt_matrix(const SymKet& psi, int k) {
  const int n = psi.n();
  check_split(n, k, "schmidt_matrix");
  const RMatrix h = split_amplitudes(n, k);
  CMatrix c(n - k + 1, k + 1);
  for (int i = 0; i <= n - k; ++i) {
    for (int j = 0; j <= k; ++j) c(i, j) = psi[i + j] * h(i, j);
  }
  return c;
}

RVector schmidt_values(const SymKet& psi, int k) {
  const CMatrix c = schmidt_matrix(psi, k);
  RVector s;
  if (c.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::BDCSVD<RMatrix> svd(c.real());
    s = svd.singularValues();
  } else {
    Eigen::BDCSVD<CMatrix> svd(c);
    s = svd.singularValues();
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

RVector dicke_schmidt_profile(int n, int m, int k) {
  if (m < 0 || m > n) throw DomainError("dicke_schmidt_profile: need 0 <= m <= n");
  check_split(n, k, "dicke_schmidt_profile");
  const BinomTable& t = binom_table();
  RVector p = RVector::Zero(n - k + 1);
  const int lo = std::max(0, m - k);
  const int hi = std::min(m, n - k);
  for (int i = lo; i <= hi; ++i) {
    p(i) = std::exp(t.log_hypergeom(n, k, i, m - i));
  }
  return p;
}

}  // namespace symspin
