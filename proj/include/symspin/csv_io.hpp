#pragma once

#include <iosfwd>
#include <string>

#include "symspin/sym_state.hpp"

namespace symspin {

// Symmetric state files. First line `n=<N>`, then a header row, then one
// row per Dicke index with complex entries as paired re,im columns:
//
//   ket:      header `re,im`, N+1 rows
//   density:  header `re_0,im_0,...,re_N,im_N`, N+1 rows (matrix rows)
//
// Values are written with 17 significant digits so files round-trip.

void write_ket_csv(std::ostream& out, const SymKet& psi);
void write_density_csv(std::ostream& out, const SymDensity& rho);

/// Throw DataError on malformed input.
SymKet read_ket_csv(std::istream& in);
SymDensity read_density_csv(std::istream& in);

std::string format_double(double v);

}  // namespace symspin
