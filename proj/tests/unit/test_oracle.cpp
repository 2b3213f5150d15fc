#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "symspin/dynamics.hpp"
#include "symspin/linalg.hpp"
#include "symspin/oracle.hpp"
#include "symspin/states.hpp"
#include "symspin/symcore.hpp"

using namespace symspin;
using namespace symspin::oracle;
using Catch::Matchers::WithinAbs;
using testutil::max_abs;

TEST_CASE("lift then symmetrize is the identity", "[oracle]") {
  for (int n = 1; n <= 10; ++n) {
    const SymKet psi = make_random(n, n);
    REQUIRE((symmetrize(lift(psi)) - psi.amps()).cwiseAbs().maxCoeff() < 1e-12);
  }
  const SymDensity rho = testutil::random_density(5, 3);
  REQUIRE(max_abs(symmetrize(lift(rho)) - rho.mat()) < 1e-12);
  REQUIRE(max_abs(project(lift(rho)).mat() - rho.mat()) < 1e-12);
}

TEST_CASE("symmetrizer annihilates the singlet", "[oracle]") {
  CVector singlet = CVector::Zero(4);
  singlet(1) = 1 / std::sqrt(2.0);
  singlet(2) = -1 / std::sqrt(2.0);
  const FullKet s(2, singlet);
  REQUIRE(symmetrize(s).cwiseAbs().maxCoeff() < 1e-15);
  REQUIRE_THROWS_AS(project(s), DataError);
}

TEST_CASE("oracle partial trace basics", "[oracle]") {
  const auto full = FullDensity::from_ket(lift(make_polarized(5)));
  const auto one = full_partial_trace(full, {0, 1, 2, 3});
  CMatrix expect = CMatrix::Zero(2, 2);
  expect(0, 0) = 1;
  REQUIRE(max_abs(one.mat() - expect) < 1e-15);

  const auto ghz = FullDensity::from_ket(lift(make_ghz(3)));
  REQUIRE(max_abs(full_partial_trace(ghz, {0}).mat() - full_partial_trace(ghz, {2}).mat()) < 1e-12);
}

TEST_CASE("projected oracle trace equals the symmetric trace", "[oracle]") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SymKet psi = make_random(8, seed);
    const auto full = FullDensity::from_ket(lift(psi));
    const SymDensity ref = partial_trace(psi, 3);
    for (const std::vector<int>& subset :
         {std::vector<int>{0, 1, 2}, std::vector<int>{7, 2, 4}, std::vector<int>{1, 3, 6}}) {
      REQUIRE(max_abs(project(full_partial_trace(full, subset)).mat() - ref.mat()) < 1e-10);
    }
  }
}

TEST_CASE("oracle partial transpose", "[oracle]") {
  const auto product = FullDensity::from_ket(lift(make_polarized(4)));
  REQUIRE(hermitian_eigenvalues(full_partial_transpose(product, {0, 1}).mat()).minCoeff() >= -1e-12);
  const auto bell = FullDensity::from_ket(lift(make_ghz(2)));
  REQUIRE_THAT(hermitian_eigenvalues(full_partial_transpose(bell, {1}).mat()).minCoeff(),
               WithinAbs(-0.5, 1e-14));

  const SymDensity rho = testutil::random_density(8, 5);
  RVector ours = RVector::Zero(256);
  const RVector ev = hermitian_eigenvalues(partial_transpose(rho, 3).mat());
  ours.head(ev.size()) = ev;
  RVector theirs = hermitian_eigenvalues(full_partial_transpose(lift(rho), {5, 6, 7}).mat());
  std::sort(ours.begin(), ours.end());
  std::sort(theirs.begin(), theirs.end());
  REQUIRE((ours - theirs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("oracle evolution", "[oracle]") {
  const SymKet psi = make_random(6, 4);
  const FullKet phi = lift(psi);
  REQUIRE((full_evolve(phi, HamiltonianKind::counter_twist, 0.0).amps() - phi.amps())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  for (auto kind : {HamiltonianKind::counter_twist, HamiltonianKind::twist, HamiltonianKind::jx,
                    HamiltonianKind::jy, HamiltonianKind::jz}) {
    const FullKet out = full_evolve(phi, kind, 0.37);
    const SymKet ref = propagate(psi, build_hamiltonian(6, kind), 0.37);
    REQUIRE((project(out).amps() - ref.amps()).cwiseAbs().maxCoeff() < 1e-9);
    // The evolved state never leaves the symmetric subspace.
    REQUIRE((out.amps() - lift(project(out)).amps()).norm() < 1e-9);
  }
  const SymKet polarized = make_polarized(6);
  const SymKet small = propagate(polarized, build_hamiltonian(6, HamiltonianKind::counter_twist), 0.1);
  const FullKet full = full_evolve(lift(polarized), HamiltonianKind::counter_twist, 0.1);
  REQUIRE((lift(small).amps() - full.amps()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("symmetric Hamiltonian is the compressed full operator", "[oracle]") {
  for (auto kind : {HamiltonianKind::counter_twist, HamiltonianKind::twist, HamiltonianKind::jy}) {
    const CMatrix full = full_hamiltonian(5, kind);
    const CMatrix sym = build_hamiltonian(5, kind).mat;
    for (int a = 0; a <= 5; ++a) {
      for (int b = 0; b <= 5; ++b) {
        CVector ea = CVector::Zero(6), eb = CVector::Zero(6);
        ea(a) = eb(b) = 1;
        const cplx v = lift(SymKet(5, ea)).amps().dot(full * lift(SymKet(5, eb)).amps());
        REQUIRE(std::abs(v - sym(a, b)) < 1e-12);
      }
    }
  }
}

TEST_CASE("oracle caps and bad subsets", "[oracle]") {
  REQUIRE_THROWS_AS(lift(make_random(kMaxKetSpins + 1, 1)), DomainError);
  REQUIRE_THROWS_AS(full_hamiltonian(kMaxEvolveSpins + 1, HamiltonianKind::twist), DomainError);
  const auto full = FullDensity::from_ket(lift(make_ghz(4)));
  REQUIRE_THROWS_AS(full_partial_trace(full, {}), DomainError);
  REQUIRE_THROWS_AS(full_partial_trace(full, {1, 1}), DomainError);
  REQUIRE_THROWS_AS(full_partial_trace(full, {4}), DomainError);
  REQUIRE_THROWS_AS(full_partial_transpose(full, {-1}), DomainError);
  REQUIRE(first_spins(3) == std::vector<int>{0, 1, 2});
}
