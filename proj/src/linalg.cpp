#include "symspin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symspin {

namespace {

constexpr double kRelativeCutoff = 1e-14;

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

CMatrix gather(const CMatrix& a, const std::vector<int>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  CMatrix sub(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) sub(r, c) = a(idx[r], idx[c]);
  }
  return sub;
}

bool effectively_real(const CMatrix& a, double cutoff) {
  return a.imag().cwiseAbs().maxCoeff() <= cutoff;
}

// Eigen-decomposition of one coupled block. Vectors only when requested.
void solve_block(const CMatrix& sub, double cutoff, bool want_vectors,
                 RVector& values, CMatrix& vectors) {
  const auto options = want_vectors ? Eigen::ComputeEigenvectors
                                    : Eigen::EigenvaluesOnly;
  if (sub.rows() == 1) {
    values = RVector::Constant(1, sub(0, 0).real());
    if (want_vectors) vectors = CMatrix::Identity(1, 1);
    return;
  }
  if (effectively_real(sub, cutoff)) {
    const RMatrix re = sub.real();
    Eigen::SelfAdjointEigenSolver<RMatrix> es(re, options);
    values = es.eigenvalues();
    if (want_vectors) vectors = es.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sub, options);
    values = es.eigenvalues();
    if (want_vectors) vectors = es.eigenvectors();
  }
}

HermitianEigen decompose(const CMatrix& a, bool want_vectors) {
  const Eigen::Index n = a.rows();
  HermitianEigen out;
  out.values.resize(n);
  if (want_vectors) out.vectors = CMatrix::Zero(n, n);
  if (n == 0) return out;

  const double cutoff = kRelativeCutoff * max_abs(a);
  const auto blocks = coupled_blocks(a, cutoff);

  std::vector<double> all_values;
  std::vector<CVector> all_vectors;
  all_values.reserve(n);
  for (const auto& idx : blocks) {
    RVector values;
    CMatrix vectors;
    solve_block(gather(a, idx), cutoff, want_vectors, values, vectors);
    for (Eigen::Index j = 0; j < values.size(); ++j) {
      all_values.push_back(values(j));
      if (want_vectors) {
        CVector v = CVector::Zero(n);
        for (std::size_t r = 0; r < idx.size(); ++r) v(idx[r]) = vectors(r, j);
        all_vectors.push_back(std::move(v));
      }
    }
  }

  std::vector<int> order(all_values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int l, int r) { return all_values[l] < all_values[r]; });
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = all_values[order[j]];
    if (want_vectors) out.vectors.col(j) = all_vectors[order[j]];
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> coupled_blocks(const CMatrix& a, double cutoff) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int c = 0; c < n; ++c) {
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a(r, c)) > cutoff || std::abs(a(c, r)) > cutoff) {
        const int rr = find_root(parent, r);
        const int rc = find_root(parent, c);
        if (rr != rc) parent[std::max(rr, rc)] = std::min(rr, rc);
      }
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find_root(parent, i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(i);
  }
  return blocks;
}

RVector hermitian_eigenvalues(const CMatrix& a) {
  return decompose(a, false).values;
}

HermitianEigen hermitian_eigensystem(const CMatrix& a) {
  return decompose(a, true);
}

double hermitian_defect(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double shannon_entropy_bits(const RVector& probabilities, double zero_cutoff) {
  double s = 0.0;
  for (const double p : probabilities) {
    if (p > zero_cutoff) s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

}  // namespace symspin
