#include "symspin/states.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <vector>

namespace symspin {

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError("state spec: bad " + std::string(what) + " '" +
                      std::string(text) + "'");
  }
  return value;
}

}  // namespace

StateSpec StateSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  StateSpec spec;
  if (head == "ghz" && !has_arg) {
    spec.family = Family::ghz;
  } else if (head == "polarized" && !has_arg) {
    spec.family = Family::polarized;
  } else if (head == "dicke" && has_arg) {
    spec.family = Family::dicke;
    if (arg == "half") {
      spec.m_half = true;
    } else {
      spec.m = parse_number<int>(arg, "excitation");
      if (spec.m < 0) throw DomainError("state spec: negative excitation");
    }
  } else if (head == "comb" && has_arg) {
    spec.family = Family::comb;
    if (arg == "auto") {
      spec.s_auto = true;
    } else {
      spec.s = parse_number<int>(arg, "spacing");
      if (spec.s < 1) throw DomainError("state spec: comb spacing must be >= 1");
    }
  } else if (head == "random" && has_arg) {
    spec.family = Family::random;
    spec.seed = parse_number<std::uint64_t>(arg, "seed");
  } else {
    throw DomainError("unrecognized state spec '" + std::string(text) + "'");
  }
  return spec;
}

std::string StateSpec::to_string() const {
  switch (family) {
    case Family::ghz:
      return "ghz";
    case Family::polarized:
      return "polarized";
    case Family::dicke:
      return m_half ? "dicke:half" : "dicke:" + std::to_string(m);
    case Family::comb:
      return s_auto ? "comb:auto" : "comb:" + std::to_string(s);
    case Family::random:
      return "random:" + std::to_string(seed);
  }
  return {};
}

int StateSpec::excitation(int n) const { return m_half ? n / 2 : m; }

int StateSpec::spacing(int n) const {
  return s_auto ? optimal_comb_spacing(n) : s;
}

SymKet make_ghz(int n) {
  if (n < 2) throw DomainError("make_ghz: need n >= 2");
  CVector a = CVector::Zero(n + 1);
  a(0) = a(n) = 1.0;
  return SymKet(n, std::move(a));
}

SymKet make_dicke(int n, int m) {
  if (n < 1) throw DomainError("make_dicke: need n >= 1");
  if (m < 0 || m > n) throw DomainError("make_dicke: need 0 <= m <= n");
  CVector a = CVector::Zero(n + 1);
  a(m) = 1.0;
  return SymKet(n, std::move(a));
}

SymKet make_polarized(int n) { return make_dicke(n, 0); }

int optimal_comb_spacing(int n) {
  return std::max(1, static_cast<int>(std::lround(std::sqrt(2.0 * n))));
}

std::vector<int> comb_teeth(int n, int s) {
  if (n < 1) throw DomainError("comb: need n >= 1");
  if (s < 1 || s > n) throw DomainError("comb: need 1 <= s <= n");
  const int center = n / 2;
  std::vector<int> teeth;
  for (int idx = center % s; idx <= n; idx += s) teeth.push_back(idx);
  return teeth;
}

SymKet make_comb(int n, int s) {
  CVector a = CVector::Zero(n + 1);
  for (const int idx : comb_teeth(n, s)) a(idx) = 1.0;
  return SymKet(n, std::move(a));
}

CVector random_amplitudes(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("make_random: need n >= 1");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5 / (n + 1)));
  CVector a(n + 1);
  for (int m = 0; m <= n; ++m) {
    const double re = gauss(engine);
    const double im = gauss(engine);
    a(m) = cplx(re, im);
  }
  return a;
}

SymKet make_random(int n, std::uint64_t seed) {
  return SymKet(n, random_amplitudes(n, seed));
}

std::string_view rng_algorithm() {
  return "mt19937_64/std::normal_distribution";
}

SymKet make_state(const StateSpec& spec, int n) {
  switch (spec.family) {
    case Family::ghz:
      return make_ghz(n);
    case Family::polarized:
      return make_polarized(n);
    case Family::dicke:
      return make_dicke(n, spec.excitation(n));
    case Family::comb:
      return make_comb(n, spec.spacing(n));
    case Family::random:
      return make_random(n, spec.seed);
  }
  throw DomainError("make_state: unknown family");
}

}  // namespace symspin
