#pragma once

#include <vector>

#include "symspin/dynamics.hpp"
#include "symspin/sym_state.hpp"

// Brute-force reference over the full 2^N spin space. Exists to validate the
// symmetric-subspace transforms at small N; no attempt at efficiency.
namespace symspin::oracle {

inline constexpr int kMaxKetSpins = 12;
inline constexpr int kMaxDensitySpins = 10;
inline constexpr int kMaxEvolveSpins = 8;

/// Amplitudes indexed by bitstring; bit i is the state of spin i (1 = up).
class FullKet {
 public:
  FullKet(int n, CVector amps);  // normalizes
  int n() const { return n_; }
  const CVector& amps() const { return amps_; }

 private:
  int n_;
  CVector amps_;
};

class FullDensity {
 public:
  FullDensity(int n, CMatrix mat);  // Hermitian, unit trace
  static FullDensity from_ket(const FullKet& phi);
  int n() const { return n_; }
  const CMatrix& mat() const { return mat_; }

 private:
  int n_;
  CMatrix mat_;
};

/// S_N^dagger: amplitude of bitstring b is amps[popcount b] * C_{N,popcount b}.
FullKet lift(const SymKet& psi);
FullDensity lift(const SymDensity& rho);

/// S_N applied without renormalization; non-symmetric parts are lost.
CVector symmetrize(const FullKet& phi);
CMatrix symmetrize(const FullDensity& rho);

/// S_N followed by renormalization. Throws DataError if nothing survives.
SymKet project(const FullKet& phi);
SymDensity project(const FullDensity& rho);

/// Reduced state on the spins not in `subset`, kept in increasing order.
FullDensity full_partial_trace(const FullDensity& rho, const std::vector<int>& subset);

/// Transpose of the tensor factors belonging to `subset`.
FullDensity full_partial_transpose(const FullDensity& rho, const std::vector<int>& subset);

/// Singular values (descending) of phi split into (complement, subset).
RVector full_schmidt_values(const FullKet& phi, const std::vector<int>& subset);

/// Collective operator built from single-spin Pauli halves in 2^N space.
CMatrix full_hamiltonian(int n, HamiltonianKind kind);

/// exp(-i H t) phi with H = full_hamiltonian(n, kind).
FullKet full_evolve(const FullKet& phi, HamiltonianKind kind, double t);

/// Spins 0..k-1.
std::vector<int> first_spins(int k);

}  // namespace symspin::oracle
