#pragma once

#include <cstdint>
#include <random>

#include "symspin/states.hpp"
#include "symspin/sym_state.hpp"

namespace testutil {

// Mixture of `rank` random symmetric kets with random weights.
inline symspin::SymDensity random_density(int n, std::uint64_t seed, int rank = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  symspin::CMatrix mat = symspin::CMatrix::Zero(n + 1, n + 1);
  double total = 0;
  for (int r = 0; r < rank; ++r) {
    const double w = u(rng);
    const auto psi = symspin::make_random(n, seed * 1000 + static_cast<std::uint64_t>(r));
    mat += w * psi.amps() * psi.amps().adjoint();
    total += w;
  }
  mat /= total;
  mat = 0.5 * (mat + mat.adjoint()).eval();
  return symspin::SymDensity(n, mat);
}

inline double max_abs(const symspin::CMatrix& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace testutil
