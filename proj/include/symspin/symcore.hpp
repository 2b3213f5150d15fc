#pragma once

#include "symspin/binomial.hpp"
#include "symspin/sym_state.hpp"

namespace symspin {

/// Amplitude of |i>_{n-k} (x) |j>_k in the split of the Dicke state
/// |i+j>_n:  sqrt(binom(n-k, i) binom(k, j) / binom(n, i+j)).
/// Rows i = 0..n-k, columns j = 0..k.
RMatrix split_amplitudes(int n, int k);

/// Reduced state after tracing out k of the rho.n() spins.
/// Requires 1 <= k <= n - 1.
SymDensity partial_trace(const SymDensity& rho, int k);

/// Reduced state of a pure state after tracing out k spins.
SymDensity partial_trace(const SymKet& psi, int k);

/// Keeps `remaining` spins of rho (remaining == rho.n() returns rho).
SymDensity reduce_to(const SymDensity& rho, int remaining);
SymDensity reduce_to(const SymKet& psi, int remaining);

/// Embedding of rho into S_{n-k} (x) S_k, no transpose.
SplitDensity embed_split(const SymDensity& rho, int k);

/// Partial transpose over the k-spin side B of the split {n-k, k}.
SplitDensity partial_transpose(const SymDensity& rho, int k);

/// Transpose of the B factor of an arbitrary split operator.
SplitDensity transpose_side_b(const SplitDensity& op);

/// (n-k+1)x(k+1) Schmidt coefficient matrix of psi over {n-k, k}.
CMatrix schmidt_matrix(const SymKet& psi, int k);

/// Singular values of schmidt_matrix(psi, k), descending.
RVector schmidt_values(const SymKet& psi, int k);

/// Squared Schmidt profile of the Dicke state |m>_n over the split
/// {n-k, k}: entry i (= excitations on the n-k side, 0..n-k) is the
/// hypergeometric probability binom(n-k,i) binom(k,m-i) / binom(n,m).
RVector dicke_schmidt_profile(int n, int m, int k);

}  // namespace symspin
