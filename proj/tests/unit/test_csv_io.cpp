#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"
#include "symspin/csv_io.hpp"
#include "symspin/states.hpp"

using namespace symspin;

TEST_CASE("ket files round-trip", "[csv]") {
  const SymKet psi = make_random(17, 8);
  std::stringstream ss;
  write_ket_csv(ss, psi);
  const SymKet back = read_ket_csv(ss);
  REQUIRE(back.n() == 17);
  REQUIRE((back.amps() - psi.amps()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("density files round-trip exactly", "[csv]") {
  const SymDensity rho = testutil::random_density(6, 2);
  std::stringstream ss;
  write_density_csv(ss, rho);
  const SymDensity back = read_density_csv(ss);
  REQUIRE(back.mat() == rho.mat());
}

TEST_CASE("file layout", "[csv]") {
  std::stringstream ss;
  write_ket_csv(ss, make_dicke(1, 1));
  REQUIRE(ss.str() == "n=1\nre,im\n0,0\n1,0\n");
  std::stringstream sd;
  write_density_csv(sd, make_dicke(1, 0).density());
  REQUIRE(sd.str() == "n=1\nre_0,im_0,re_1,im_1\n1,0,0,0\n0,0,0,0\n");
  REQUIRE(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("malformed files are data errors", "[csv]") {
  const char* bad_kets[] = {
      "",
      "N=1\nre,im\n1,0\n0,0\n",
      "n=x\nre,im\n1,0\n0,0\n",
      "n=0\nre,im\n1,0\n",
      "n=1\nre;im\n1,0\n0,0\n",
      "n=1\nre,im\n1,0\n",
      "n=1\nre,im\n1,0,0\n0,0\n",
      "n=1\nre,im\n1,abc\n0,0\n",
      "n=1\nre,im\n0,0\n0,0\n",
  };
  for (const char* text : bad_kets) {
    std::istringstream in(text);
    REQUIRE_THROWS_AS(read_ket_csv(in), DataError);
  }
  const char* bad_densities[] = {
      "n=1\nre,im\n1,0,0,0\n0,0,0,0\n",
      "n=1\nre_0,im_0,re_1,im_1\n1,0,0,0\n",
      "n=1\nre_0,im_0,re_1,im_1\n1,0,0.5,0\n0,0,0,0\n",  // not Hermitian
      "n=1\nre_0,im_0,re_1,im_1\n1,0,0,0\n0,0,1,0\n",    // trace 2
  };
  for (const char* text : bad_densities) {
    std::istringstream in(text);
    REQUIRE_THROWS_AS(read_density_csv(in), DataError);
  }
}
