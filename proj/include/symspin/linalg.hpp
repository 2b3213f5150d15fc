#pragma once

#include <vector>

#include "symspin/types.hpp"

namespace symspin {

struct HermitianEigen {
  RVector values;   // ascending
  CMatrix vectors;  // columns, matching `values`
};

/// Groups of indices that are coupled by entries above `cutoff` in
/// magnitude. A Hermitian matrix is block diagonal over these groups up to
/// entries of size `cutoff`.
std::vector<std::vector<int>> coupled_blocks(const CMatrix& a, double cutoff);

/// Eigenvalues (ascending) of a Hermitian matrix.
///
/// The matrix is split into its coupled blocks first, and blocks whose
/// imaginary parts vanish (relative 1e-14) go through the real symmetric
/// solver. Parity-conserving dynamics and Dicke states produce exactly this
/// structure, which is where the bulk of the negativity cost goes.
RVector hermitian_eigenvalues(const CMatrix& a);

HermitianEigen hermitian_eigensystem(const CMatrix& a);

/// max_ij |a_ij - conj(a_ji)|
double hermitian_defect(const CMatrix& a);

/// Entropy in bits of a spectrum, with 0 log 0 := 0 and values below
/// `zero_cutoff` dropped.
double shannon_entropy_bits(const RVector& probabilities, double zero_cutoff);

}  // namespace symspin
