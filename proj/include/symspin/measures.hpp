#pragma once

#include <vector>

#include "symspin/sym_state.hpp"

namespace symspin {

// --- entropies -------------------------------------------------------------

/// -Tr rho log2 rho. Throws DataError if the input is not Hermitian.
double von_neumann_entropy(const SymDensity& rho);
double von_neumann_entropy(const SplitDensity& rho);

/// Entropy of entanglement of psi over {n-k, k} from its Schmidt values.
double entropy_of_entanglement(const SymKet& psi, int k);

/// Even-split entropy, k = floor(N/2).
double even_split_entropy(const SymKet& psi);

/// Eigenvalues (descending) of the state left after tracing out k spins.
RVector reduced_spectrum(const SymKet& psi, int k);

// --- two-spin measures -------------------------------------------------------

/// 4x4 two-qubit density matrix in the basis |00>,|01>,|10>,|11> of a
/// symmetric two-spin state (singlet component zero).
CMatrix two_qubit_embedding(const SymDensity& rho2);

/// Wootters concurrence of a two-spin symmetric state.
double concurrence_pair(const SymDensity& rho2);

/// Closed-form two-spin concurrence of the Dicke state |m>_n.
double dicke_concurrence_closed_form(int n, int m);

/// Binary entropy h(x) in bits.
double binary_entropy(double x);

/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double c);

double eof_pair(const SymDensity& rho2);

/// Concurrence / E_F of the pair left after tracing all but two spins.
double pair_concurrence(const SymKet& psi);
double pair_formation(const SymKet& psi);

// --- negativity --------------------------------------------------------------

/// Sum of (|lambda| - lambda)/2 over the eigenvalues of a partial transpose.
/// Eigenvalues with |lambda| < 1e-10 * dim count as zero.
double negativity(const SplitDensity& pt);

/// log2(2 N + 1).
double log_negativity(const SplitDensity& pt);

/// Log negativity of the split {n_r - k, k} of rho (n_r = rho.n()).
double log_negativity(const SymDensity& rho, int k);

/// Log negativity of the even split {floor(n_r/2), ceil(n_r/2)} of psi
/// reduced to n_r spins. For n_r == N this is 2 log2(sum of Schmidt values).
double even_split_log_negativity(const SymKet& psi, int n_r);

// --- collective spin and squeezing --------------------------------------------

struct CollectiveMoments {
  int n = 0;
  double jx_mean = 0, jy_mean = 0, jz_mean = 0;
  double jx2 = 0, jy2 = 0, jz2 = 0;
  double jxjy_sym = 0;  // <(JxJy + JyJx)/2>
};

CollectiveMoments collective_moments(const SymKet& psi);
CollectiveMoments collective_moments(const SymDensity& rho);

struct SqueezingRecord {
  int n = 0;
  double xi2 = 0;        // N <J_min^2> / <Jz>^2
  double xi1_2 = 0;      // N^2 / (4 <Jz>^2)
  double theta_min = 0;  // angle of the minimal quadrature, from x toward y
  double jmin2 = 0;      // minimal transverse second moment
  double jz_mean = 0;
};

/// Squeezing parameter with the minimal transverse quadrature found from
/// the 2x2 matrix of x-y second moments. Throws NumericalError if
/// |<Jz>| <= 1e-9.
SqueezingRecord squeezing_parameter(const CollectiveMoments& mom, int n);
SqueezingRecord squeezing_parameter(const SymKet& psi);
SqueezingRecord squeezing_parameter(const SymDensity& rho);

/// Large-N loss line: xi1^2 + (xi_N^2 - xi1^2)(n_r - 1)/(n - 1).
double squeezing_after_loss(const SqueezingRecord& rec, int n, int n_r);

// --- comparisons ---------------------------------------------------------------

/// True iff p majorizes q (descending partial sums of p dominate q's, with
/// -1e-9 slack). Both must be probability vectors within 1e-9.
bool majorizes(std::vector<double> p, std::vector<double> q);

/// 0.5 * || rho - sigma ||_1
double trace_distance(const SymDensity& rho, const SymDensity& sigma);

/// Trace distance from psi to the nearest state (|0> + e^{i phi}|N>)/sqrt 2,
/// i.e. to the GHZ state up to a collective z rotation.
double ghz_distance(const SymKet& psi);

}  // namespace symspin
