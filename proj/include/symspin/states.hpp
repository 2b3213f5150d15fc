#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symspin/sym_state.hpp"

namespace symspin {

enum class Family { ghz, dicke, comb, random, polarized };

/// A reference-state request. The particle count is supplied separately so
/// that one spec can be swept over many N.
///
/// Grammar: `ghz`, `dicke:<m>`, `dicke:half` (m = floor(N/2)), `comb:<s>`,
/// `comb:auto` (s = round(sqrt(2N))), `random:<seed>`, `polarized`.
struct StateSpec {
  Family family = Family::polarized;
  int m = 0;
  bool m_half = false;
  int s = 1;
  bool s_auto = false;
  std::uint64_t seed = 0;

  static StateSpec parse(std::string_view text);
  std::string to_string() const;

  /// Resolves `dicke:half` / `comb:auto` for a concrete N.
  int excitation(int n) const;
  int spacing(int n) const;

  bool operator==(const StateSpec&) const = default;
};

SymKet make_ghz(int n);
SymKet make_dicke(int n, int m);
SymKet make_polarized(int n);
SymKet make_comb(int n, int s);
SymKet make_random(int n, std::uint64_t seed);
SymKet make_state(const StateSpec& spec, int n);

/// round(sqrt(2N)).
int optimal_comb_spacing(int n);

/// Dicke indices floor(N/2) + j*s that fall inside [0, N].
std::vector<int> comb_teeth(int n, int s);

/// Unnormalized complex Gaussian amplitudes with E|r_m|^2 = 1/(N+1).
CVector random_amplitudes(int n, std::uint64_t seed);

/// Name of the pseudo-random algorithm behind make_random, for metadata.
std::string_view rng_algorithm();

}  // namespace symspin
