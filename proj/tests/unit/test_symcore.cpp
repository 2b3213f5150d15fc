#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "symspin/linalg.hpp"
#include "symspin/measures.hpp"
#include "symspin/oracle.hpp"
#include "symspin/states.hpp"
#include "symspin/symcore.hpp"

using namespace symspin;
using Catch::Matchers::WithinAbs;
using testutil::max_abs;

TEST_CASE("split amplitudes resolve each Dicke state", "[symcore]") {
  // Vandermonde: sum over i + j = m of h(i, j)^2 is 1.
  for (int n : {2, 7, 40, 301}) {
    for (int k : {1, n / 2, n - 1}) {
      const RMatrix h = split_amplitudes(n, k);
      REQUIRE(h.rows() == n - k + 1);
      REQUIRE(h.cols() == k + 1);
      for (int m = 0; m <= n; ++m) {
        double s = 0;
        for (int i = std::max(0, m - k); i <= std::min(n - k, m); ++i) s += h(i, m - i) * h(i, m - i);
        REQUIRE_THAT(s, WithinAbs(1.0, 1e-12));
      }
    }
  }
}

TEST_CASE("partial trace examples", "[symcore]") {
  const SymDensity r = partial_trace(make_ghz(3).density(), 1);
  CMatrix expect = CMatrix::Zero(3, 3);
  expect(0, 0) = expect(2, 2) = 0.5;
  REQUIRE(r.n() == 2);
  REQUIRE(max_abs(r.mat() - expect) < 1e-14);

  const SymDensity w = partial_trace(make_dicke(2, 1), 1);
  REQUIRE(w.n() == 1);
  REQUIRE(max_abs(w.mat() - 0.5 * CMatrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("partial trace preserves trace, Hermiticity and positivity", "[symcore]") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 3 + static_cast<int>(seed) * 4;
    const SymDensity rho = testutil::random_density(n, seed);
    for (int k = 1; k < n; k += 3) {
      const SymDensity r = partial_trace(rho, k);
      REQUIRE(r.dim() == n - k + 1);
      REQUIRE(std::abs(r.mat().trace() - cplx(1.0)) < 1e-10);
      REQUIRE(hermitian_defect(r.mat()) < 1e-10);
      REQUIRE(hermitian_eigenvalues(r.mat()).minCoeff() > -1e-10);
      // Re-validating through the checked constructor must succeed.
      REQUIRE_NOTHROW(SymDensity(r.n(), r.mat()));
    }
  }
}

TEST_CASE("partial traces compose", "[symcore]") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int n = 12 + static_cast<int>(seed);
    const SymDensity rho = testutil::random_density(n, seed);
    for (int k1 = 1; k1 < n - 1; k1 += 2) {
      for (int k2 = 1; k1 + k2 < n; k2 += 3) {
        const SymDensity two_step = partial_trace(partial_trace(rho, k1), k2);
        const SymDensity one_step = partial_trace(rho, k1 + k2);
        REQUIRE(max_abs(two_step.mat() - one_step.mat()) < 1e-10);
      }
    }
  }
}

TEST_CASE("pure-state partial trace matches the density route", "[symcore]") {
  const SymKet psi = make_random(25, 3);
  for (int k = 1; k < 25; ++k) {
    REQUIRE(max_abs(partial_trace(psi, k).mat() - partial_trace(psi.density(), k).mat()) < 1e-13);
  }
  REQUIRE(max_abs(reduce_to(psi, 25).mat() - psi.density().mat()) < 1e-15);
  REQUIRE(reduce_to(psi, 4).n() == 4);
}

TEST_CASE("partial transpose examples", "[symcore]") {
  const SplitDensity pt0 = partial_transpose(make_dicke(4, 0).density(), 2);
  REQUIRE(hermitian_eigenvalues(pt0.mat()).minCoeff() >= -1e-12);

  const SplitDensity bell = partial_transpose(make_ghz(2).density(), 1);
  REQUIRE_THAT(hermitian_eigenvalues(bell.mat()).minCoeff(), WithinAbs(-0.5, 1e-14));
}

TEST_CASE("partial transpose twice recovers the embedding", "[symcore]") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int n = 5 + static_cast<int>(seed) * 3;
    const SymDensity rho = testutil::random_density(n, seed);
    for (int k = 1; k < n; k += 2) {
      const SplitDensity pt = partial_transpose(rho, k);
      REQUIRE(pt.dim() == (n - k + 1) * (k + 1));
      REQUIRE(hermitian_defect(pt.mat()) < 1e-10);
      REQUIRE(std::abs(pt.mat().trace() - cplx(1.0)) < 1e-10);
      const SplitDensity back = transpose_side_b(pt);
      REQUIRE(max_abs(back.mat() - embed_split(rho, k).mat()) < 1e-14);
    }
  }
}

TEST_CASE("Schmidt value examples", "[symcore]") {
  const RVector bell = schmidt_values(make_dicke(2, 1), 1);
  REQUIRE_THAT(bell(0), WithinAbs(1 / std::sqrt(2.0), 1e-14));
  REQUIRE_THAT(bell(1), WithinAbs(1 / std::sqrt(2.0), 1e-14));

  const RVector d = schmidt_values(make_dicke(4, 2), 2);
  REQUIRE(d.size() == 3);
  REQUIRE_THAT(d(0), WithinAbs(2 / std::sqrt(6.0), 1e-14));
  REQUIRE_THAT(d(1), WithinAbs(1 / std::sqrt(6.0), 1e-14));
  REQUIRE_THAT(d(2), WithinAbs(1 / std::sqrt(6.0), 1e-14));

  for (int k = 1; k < 10; ++k) {
    const RVector g = schmidt_values(make_ghz(10), k);
    REQUIRE_THAT(g(0), WithinAbs(1 / std::sqrt(2.0), 1e-14));
    REQUIRE_THAT(g(1), WithinAbs(1 / std::sqrt(2.0), 1e-14));
    REQUIRE(g.tail(g.size() - 2).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("Schmidt values are normalized and descending", "[symcore]") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 2 + static_cast<int>(seed * 7 % 90);
    const SymKet psi = make_random(n, seed);
    for (int k = 1; k < n; k += std::max(1, n / 7)) {
      const RVector s = schmidt_values(psi, k);
      REQUIRE(s.size() == std::min(k, n - k) + 1);
      REQUIRE_THAT(s.squaredNorm(), WithinAbs(1.0, 1e-10));
      REQUIRE(s.minCoeff() >= 0.0);
      REQUIRE(std::is_sorted(s.begin(), s.end(), std::greater<>()));
    }
  }
}

TEST_CASE("Schmidt entropy equals the reduced von Neumann entropy", "[symcore]") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 5 * static_cast<int>(seed);
    const SymKet psi = make_random(n, seed + 100);
    for (int k = 1; k < n; k += std::max(1, n / 6)) {
      const RVector s = schmidt_values(psi, k);
      double e = 0;
      for (double v : s) {
        if (v * v > 0) e -= v * v * std::log2(v * v);
      }
      const double s_a = von_neumann_entropy(partial_trace(psi, k));
      const double s_b = von_neumann_entropy(partial_trace(psi, n - k));
      REQUIRE_THAT(s_a, WithinAbs(e, 1e-9));
      REQUIRE_THAT(s_b, WithinAbs(e, 1e-9));
      REQUIRE_THAT(entropy_of_entanglement(psi, k), WithinAbs(e, 1e-9));
    }
  }
}

TEST_CASE("Dicke Schmidt profile", "[symcore]") {
  const RVector p = dicke_schmidt_profile(4, 2, 2);
  REQUIRE(p.size() == 3);
  REQUIRE_THAT(p(0), WithinAbs(1.0 / 6, 1e-14));
  REQUIRE_THAT(p(1), WithinAbs(4.0 / 6, 1e-14));
  REQUIRE_THAT(p(2), WithinAbs(1.0 / 6, 1e-14));

  const RVector q = dicke_schmidt_profile(2, 0, 1);
  REQUIRE(q(0) == 1.0);
  REQUIRE(q(1) == 0.0);

  const RVector big = dicke_schmidt_profile(600, 300, 300);
  double mean = 0;
  for (int i = 0; i < big.size(); ++i) mean += i * big(i);
  REQUIRE_THAT(mean, WithinAbs(150.0, 1e-8));
}

TEST_CASE("Dicke profile has exact hypergeometric moments", "[symcore]") {
  for (int n : {6, 31, 120, 600}) {
    for (int m : {0, 1, n / 3, n / 2, n}) {
      for (int k : {1, n / 2, n - 1}) {
        const RVector p = dicke_schmidt_profile(n, m, k);
        double sum = 0, mean = 0, sq = 0;
        for (int i = 0; i < p.size(); ++i) {
          sum += p(i);
          mean += i * p(i);
          sq += double(i) * i * p(i);
        }
        const double draws = n - k;
        const double exp_mean = draws * m / n;
        const double exp_var = draws * (double(m) / n) * (1.0 - double(m) / n) * (n - draws) / (n - 1);
        REQUIRE_THAT(sum, WithinAbs(1.0, 1e-10));
        REQUIRE_THAT(mean, WithinAbs(exp_mean, 1e-9));
        REQUIRE_THAT(sq - mean * mean, WithinAbs(exp_var, 1e-7 * std::max(1.0, exp_var)));
      }
    }
  }
  // Even split: variance m(N - m) / (4(N - 1)).
  const RVector p = dicke_schmidt_profile(100, 30, 50);
  double mean = 0, sq = 0;
  for (int i = 0; i < p.size(); ++i) {
    mean += i * p(i);
    sq += double(i) * i * p(i);
  }
  REQUIRE_THAT(sq - mean * mean, WithinAbs(30.0 * 70 / (4 * 99), 1e-9));
}

TEST_CASE("Dicke profile equals squared Schmidt values", "[symcore]") {
  const RVector p = dicke_schmidt_profile(40, 13, 17);
  RVector sorted = p;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const RVector s = schmidt_values(make_dicke(40, 13), 17);
  for (int i = 0; i < s.size(); ++i) REQUIRE_THAT(s(i) * s(i), WithinAbs(sorted(i), 1e-12));
}

TEST_CASE("symcore agrees with the full-space oracle", "[symcore][oracle]") {
  for (int n = 2; n <= 8; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const SymDensity rho = testutil::random_density(n, seed * 10 + n);
      const auto full = oracle::lift(rho);
      for (int k = 1; k < n; ++k) {
        const auto ref = oracle::full_partial_trace(full, oracle::first_spins(k));
        REQUIRE(max_abs(oracle::lift(partial_trace(rho, k)).mat() - ref.mat()) < 1e-10);

        RVector ours = RVector::Zero(1 << n);
        const RVector ev = hermitian_eigenvalues(partial_transpose(rho, k).mat());
        ours.head(ev.size()) = ev;
        RVector theirs = hermitian_eigenvalues(
            oracle::full_partial_transpose(full, oracle::first_spins(k)).mat());
        std::sort(ours.begin(), ours.end());
        std::sort(theirs.begin(), theirs.end());
        REQUIRE((ours - theirs).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
  // N = 10: partial trace over a non-contiguous subset and Schmidt values.
  const SymKet psi = make_random(10, 77);
  const auto full = oracle::FullDensity::from_ket(oracle::lift(psi));
  const auto ref = oracle::full_partial_trace(full, {1, 4, 8});
  REQUIRE(max_abs(oracle::lift(partial_trace(psi, 3)).mat() - ref.mat()) < 1e-10);
  for (int k = 1; k < 10; ++k) {
    const RVector s = schmidt_values(psi, k);
    const RVector f = oracle::full_schmidt_values(oracle::lift(psi), oracle::first_spins(k));
    REQUIRE((s - f.head(s.size())).cwiseAbs().maxCoeff() < 1e-10);
    if (f.size() > s.size()) REQUIRE(f.tail(f.size() - s.size()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("split sizes out of range are domain errors", "[symcore]") {
  const SymKet psi = make_random(6, 1);
  const SymDensity rho = psi.density();
  for (int k : {0, 6, -1, 7}) {
    REQUIRE_THROWS_AS(partial_trace(rho, k), DomainError);
    REQUIRE_THROWS_AS(partial_transpose(rho, k), DomainError);
    REQUIRE_THROWS_AS(schmidt_values(psi, k), DomainError);
    REQUIRE_THROWS_AS(dicke_schmidt_profile(6, 2, k), DomainError);
  }
  REQUIRE_THROWS_AS(dicke_schmidt_profile(6, 7, 2), DomainError);
  REQUIRE_THROWS_AS(reduce_to(rho, 0), DomainError);
  REQUIRE_THROWS_AS(reduce_to(rho, 7), DomainError);
}

TEST_CASE("state containers validate their invariants", "[symcore]") {
  REQUIRE_THROWS_AS(SymKet(0, CVector::Ones(1)), DomainError);
  REQUIRE_THROWS_AS(SymKet(3, CVector::Ones(3)), DomainError);
  REQUIRE_THROWS_AS(SymKet(2, CVector::Zero(3)), DataError);
  const SymKet psi(2, CVector::Ones(3));
  REQUIRE_THAT(psi.amps().squaredNorm(), WithinAbs(1.0, 1e-15));

  CMatrix bad = CMatrix::Identity(3, 3) / 3.0;
  bad(0, 1) = 0.1;
  REQUIRE_THROWS_AS(SymDensity(2, bad), DataError);
  REQUIRE_THROWS_AS(SymDensity(2, CMatrix::Identity(3, 3)), DataError);
  CMatrix neg = CMatrix::Zero(3, 3);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  REQUIRE_THROWS_AS(SymDensity(2, neg), DataError);

  REQUIRE_THROWS_AS(Split(10, 11, 3), DomainError);
  REQUIRE_THROWS_AS(Split(10, 6, 6), DomainError);
  const Split s = Split::even(50, 7);
  REQUIRE(s.k + s.other() == 7);
  REQUIRE(s.traced() == 43);
  REQUIRE(std::min(s.k, s.other()) == 3);
}
