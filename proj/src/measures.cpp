#include "symspin/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "symspin/linalg.hpp"
#include "symspin/symcore.hpp"

namespace symspin {

namespace {

// Eigenvalues at or below this are dropped from entropy sums (0 log 0 = 0).
constexpr double kEntropyCutoff = 1e-14;

void require_hermitian(const CMatrix& m, const char* op) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (hermitian_defect(m) > tol::kState * scale) {
    throw DataError(std::string(op) + ": input is not Hermitian");
  }
}

double entropy_of_matrix(const CMatrix& m) {
  require_hermitian(m, "von_neumann_entropy");
  return shannon_entropy_bits(hermitian_eigenvalues(m), kEntropyCutoff);
}

}  // namespace

double von_neumann_entropy(const SymDensity& rho) {
  return entropy_of_matrix(rho.mat());
}

double von_neumann_entropy(const SplitDensity& rho) {
  return entropy_of_matrix(rho.mat());
}

// Squared Schmidt values as eigenvalues of the smaller Gram matrix of the
// coefficient matrix; about twice as fast as the SVD for large N.
template <typename Mat>
RVector gram_spectrum(const Mat& c) {
  const bool rows_small = c.rows() < c.cols();
  const Eigen::Index d = rows_small ? c.rows() : c.cols();
  Mat g = Mat::Zero(d, d);
  if (rows_small) {
    g.template selfadjointView<Eigen::Lower>().rankUpdate(c);
  } else {
    g.template selfadjointView<Eigen::Lower>().rankUpdate(c.adjoint());
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double entropy_of_entanglement(const SymKet& psi, int k) {
  const CMatrix c = schmidt_matrix(psi, k);
  const RVector p = c.imag().cwiseAbs().maxCoeff() == 0.0 ? gram_spectrum<RMatrix>(c.real())
                                                         : gram_spectrum<CMatrix>(c);
  return shannon_entropy_bits(p, kEntropyCutoff);
}

double even_split_entropy(const SymKet& psi) {
  return entropy_of_entanglement(psi, psi.n() / 2);
}

RVector reduced_spectrum(const SymKet& psi, int k) {
  return schmidt_values(psi, k).array().square().matrix();
}

// --- two-spin --------------------------------------------------------------

CMatrix two_qubit_embedding(const SymDensity& rho2) {
  if (rho2.n() != 2) throw DomainError("two-spin measure needs n == 2");
  CMatrix v = CMatrix::Zero(4, 3);
  v(0, 0) = 1.0;
  v(1, 1) = v(2, 1) = 1.0 / std::numbers::sqrt2;
  v(3, 2) = 1.0;
  return v * rho2.mat() * v.adjoint();
}

double concurrence_pair(const SymDensity& rho2) {
  if (rho2.n() != 2) throw DomainError("concurrence_pair: needs n == 2");
  // Within the triplet, sigma_y (x) sigma_y maps |0> -> -|2>, |1> -> |1>,
  // |2> -> -|0>; the singlet block of the two-qubit state is empty, so the
  // fourth Wootters eigenvalue is exactly zero. The remaining square roots
  // are the singular values of tau = W^dag Y W^* with rho = W W^dag.
  RMatrix flip = RMatrix::Zero(3, 3);
  flip(0, 2) = flip(2, 0) = -1.0;
  flip(1, 1) = 1.0;

  const HermitianEigen eig = hermitian_eigensystem(rho2.mat());
  CMatrix w = eig.vectors;
  for (int j = 0; j < 3; ++j) w.col(j) *= std::sqrt(std::max(0.0, eig.values(j)));
  const CMatrix tau = w.adjoint() * flip.cast<cplx>() * w.conjugate();
  RVector s = Eigen::JacobiSVD<CMatrix>(tau).singularValues();
  std::sort(s.begin(), s.end(), std::greater<>());
  return std::clamp(s(0) - s(1) - s(2), 0.0, 1.0);
}

double dicke_concurrence_closed_form(int n, int m) {
  if (n < 2) throw DomainError("dicke_concurrence_closed_form: need n >= 2");
  if (m < 0 || m > n) throw DomainError("dicke_concurrence_closed_form: need 0 <= m <= n");
  const double nn = n;
  const double big_m = m - nn / 2.0;
  const double a = nn * nn - 4.0 * big_m * big_m;
  const double b = (nn - 2.0) * (nn - 2.0) - 4.0 * big_m * big_m;
  const double root = std::sqrt(std::max(0.0, a * b));
  return std::max(0.0, (a - root) / (2.0 * nn * (nn - 1.0)));
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -(x * std::log2(x) + (1.0 - x) * std::log1p(-x) / std::numbers::ln2);
}

double eof_from_concurrence(double c) {
  if (c < 0.0 || c > 1.0 + 1e-12) throw DomainError("concurrence outside [0, 1]");
  c = std::min(c, 1.0);
  const double root = std::sqrt(1.0 - c * c);
  // (1 - root)/2 without cancellation; h is symmetric about 1/2.
  const double small = c * c / (2.0 * (1.0 + root));
  return binary_entropy(small);
}

double eof_pair(const SymDensity& rho2) {
  return eof_from_concurrence(concurrence_pair(rho2));
}

double pair_concurrence(const SymKet& psi) {
  return concurrence_pair(reduce_to(psi, 2));
}

double pair_formation(const SymKet& psi) {
  return eof_pair(reduce_to(psi, 2));
}

// --- negativity --------------------------------------------------------------

double negativity(const SplitDensity& pt) {
  require_hermitian(pt.mat(), "negativity");
  const RVector ev = hermitian_eigenvalues(pt.mat());
  const double zero = tol::kEigenZero * pt.dim();
  double sum = 0.0;
  for (const double l : ev) {
    if (l < -zero) sum -= l;
  }
  return sum;
}

double log_negativity(const SplitDensity& pt) {
  return std::log2(2.0 * negativity(pt) + 1.0);
}

double log_negativity(const SymDensity& rho, int k) {
  return log_negativity(partial_transpose(rho, k));
}

double even_split_log_negativity(const SymKet& psi, int n_r) {
  if (n_r < 2 || n_r > psi.n()) {
    throw DomainError("even_split_log_negativity: need 2 <= n_r <= N");
  }
  if (n_r == psi.n()) {
    const double sum = schmidt_values(psi, n_r / 2).sum();
    return std::max(0.0, 2.0 * std::log2(sum));
  }
  return log_negativity(reduce_to(psi, n_r), n_r / 2);
}

// --- collective spin -----------------------------------------------------------

namespace {

// Moments of the J = n/2 pseudo-spin from matrix elements rho(r, c).
template <typename Element>
CollectiveMoments moments_from(int n, Element rho) {
  // Second moments reach N^2/4; long double keeps the sums well under 1e-9.
  using ld = long double;
  using cld = std::complex<ld>;
  const ld j = n / 2.0L;
  cld jp = 0.0L;   // <J+>
  cld jp2 = 0.0L;  // <J+^2>
  ld jz = 0.0L, jz2 = 0.0L, anti = 0.0L;  // anti = <J+J- + J-J+>
  for (int m = 0; m <= n; ++m) {
    const ld p = rho(m, m).real();
    const ld mz = m - j;
    jz += p * mz;
    jz2 += p * mz * mz;
    anti += p * (2.0L * (j * (j + 1.0L) - mz * mz));
    if (m + 1 <= n) {
      const ld l1 = std::sqrt(static_cast<ld>(n - m) * (m + 1));
      jp += l1 * cld(rho(m, m + 1));
      if (m + 2 <= n) {
        const ld l2 = std::sqrt(static_cast<ld>(n - m - 1) * (m + 2));
        jp2 += l1 * l2 * cld(rho(m, m + 2));
      }
    }
  }
  CollectiveMoments out;
  out.n = n;
  out.jz_mean = static_cast<double>(jz);
  out.jz2 = static_cast<double>(jz2);
  out.jx_mean = static_cast<double>(jp.real());
  out.jy_mean = static_cast<double>(jp.imag());
  out.jx2 = static_cast<double>(0.25L * (2.0L * jp2.real() + anti));
  out.jy2 = static_cast<double>(0.25L * (-2.0L * jp2.real() + anti));
  out.jxjy_sym = static_cast<double>(0.5L * jp2.imag());
  return out;
}

}  // namespace

// Tr(rho J+) = sum_m l_m rho(m, m+1); for a ket rho(r, c) = a_r conj(a_c).
CollectiveMoments collective_moments(const SymKet& psi) {
  const CVector& a = psi.amps();
  return moments_from(psi.n(), [&](int r, int c) { return a(r) * std::conj(a(c)); });
}

CollectiveMoments collective_moments(const SymDensity& rho) {
  const CMatrix& m = rho.mat();
  return moments_from(rho.n(), [&](int r, int c) { return m(r, c); });
}

SqueezingRecord squeezing_parameter(const CollectiveMoments& mom, int n) {
  if (std::abs(mom.jz_mean) <= 1e-9) {
    throw NumericalError("squeezing undefined: <Jz> vanishes");
  }
  const double mean = 0.5 * (mom.jx2 + mom.jy2);
  const double half_diff = 0.5 * (mom.jx2 - mom.jy2);
  const double radius = std::hypot(half_diff, mom.jxjy_sym);
  SqueezingRecord rec;
  rec.n = n;
  rec.jz_mean = mom.jz_mean;
  rec.jmin2 = mean - radius;
  // Major axis at 0.5 atan2(2 Cxy, Cxx - Cyy); the minimal quadrature is
  // perpendicular to it.
  double theta = 0.5 * std::atan2(2.0 * mom.jxjy_sym, mom.jx2 - mom.jy2) +
                 std::numbers::pi / 2.0;
  theta = std::fmod(theta, std::numbers::pi);
  if (theta < 0) theta += std::numbers::pi;
  rec.theta_min = theta;
  const double jz2mean = mom.jz_mean * mom.jz_mean;
  rec.xi2 = n * rec.jmin2 / jz2mean;
  rec.xi1_2 = static_cast<double>(n) * n / (4.0 * jz2mean);
  return rec;
}

SqueezingRecord squeezing_parameter(const SymKet& psi) {
  return squeezing_parameter(collective_moments(psi), psi.n());
}

SqueezingRecord squeezing_parameter(const SymDensity& rho) {
  return squeezing_parameter(collective_moments(rho), rho.n());
}

double squeezing_after_loss(const SqueezingRecord& rec, int n, int n_r) {
  if (n < 2 || n_r < 1 || n_r > n) {
    throw DomainError("squeezing_after_loss: need 1 <= n_r <= n, n >= 2");
  }
  if (n_r == n) return rec.xi2;
  return rec.xi1_2 + (rec.xi2 - rec.xi1_2) * (n_r - 1.0) / (n - 1.0);
}

// --- comparisons ---------------------------------------------------------------

bool majorizes(std::vector<double> p, std::vector<double> q) {
  constexpr double slack = 1e-9;
  for (const auto* v : {&p, &q}) {
    double sum = 0.0;
    for (const double x : *v) {
      if (!(x >= -slack)) throw DataError("majorizes: negative probability");
      sum += x;
    }
    if (std::abs(sum - 1.0) > slack) throw DataError("majorizes: vector does not sum to 1");
  }
  const std::size_t len = std::max(p.size(), q.size());
  p.resize(len, 0.0);
  q.resize(len, 0.0);
  std::sort(p.begin(), p.end(), std::greater<>());
  std::sort(q.begin(), q.end(), std::greater<>());
  double ps = 0.0, qs = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    ps += p[i];
    qs += q[i];
    if (ps < qs - slack) return false;
  }
  return true;
}

double trace_distance(const SymDensity& rho, const SymDensity& sigma) {
  if (rho.n() != sigma.n()) throw DomainError("trace_distance: dimension mismatch");
  const RVector ev = hermitian_eigenvalues(rho.mat() - sigma.mat());
  return 0.5 * ev.cwiseAbs().sum();
}

// For pure states D = sqrt(1 - F); the best phase aligns a_0 and a_N, so
// max_phi F = (|a_0| + |a_N|)^2 / 2.
double ghz_distance(const SymKet& psi) {
  const double overlap = (std::abs(psi[0]) + std::abs(psi[psi.n()])) / std::numbers::sqrt2;
  return std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
}

}  // namespace symspin
