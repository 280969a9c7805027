#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pft/constants.hpp"
#include "pft/errors.hpp"

TEST_CASE("natural units") {
  const pft::Constants ct = pft::natural_units();
  CHECK(ct.hbar == 1.0);
  CHECK(ct.epsilon == 1.0);
  CHECK(ct.c == 1.0);
  CHECK(ct.tau0() == 1.0);
  CHECK(ct.power_scale() == 1.0);
  ct.validate();
}

TEST_CASE("derived scales follow the fields") {
  pft::Constants ct;
  ct.hbar = 2.0;
  ct.epsilon = 0.5;
  CHECK(ct.tau0() == 4.0);
  CHECK(ct.power_scale() == 0.25);
}

TEST_CASE("config parsing") {
  SUBCASE("full file with comments and blanks") {
    const auto ct = pft::constants_from_config(
        "# scales for a desk run\n"
        "hbar = 2\n"
        "\n"
        "epsilon = 0.5   # energy constant\n"
        "c = 3\n");
    CHECK(ct.hbar == 2.0);
    CHECK(ct.epsilon == 0.5);
    CHECK(ct.c == 3.0);
  }

  SUBCASE("missing keys keep natural defaults") {
    const auto ct = pft::constants_from_config("epsilon = 0.37\n");
    CHECK(ct.hbar == 1.0);
    CHECK(ct.epsilon == 0.37);
    CHECK(ct.c == 1.0);
  }

  SUBCASE("no trailing newline") {
    const auto ct = pft::constants_from_config("hbar = 4");
    CHECK(ct.hbar == 4.0);
  }

  SUBCASE("empty text gives natural units") {
    const auto ct = pft::constants_from_config("");
    CHECK(ct.hbar == 1.0);
    CHECK(ct.epsilon == 1.0);
  }

  SUBCASE("unknown key") {
    CHECK_THROWS_AS(pft::constants_from_config("planck = 1\n"), pft::ParseError);
  }

  SUBCASE("duplicate key") {
    CHECK_THROWS_AS(pft::constants_from_config("hbar = 1\nhbar = 2\n"), pft::ParseError);
  }

  SUBCASE("non-numeric value") {
    CHECK_THROWS_AS(pft::constants_from_config("hbar = two\n"), pft::ParseError);
  }

  SUBCASE("trailing junk after the number") {
    CHECK_THROWS_AS(pft::constants_from_config("hbar = 1.0x\n"), pft::ParseError);
  }

  SUBCASE("missing equals") {
    CHECK_THROWS_AS(pft::constants_from_config("hbar 1\n"), pft::ParseError);
  }

  SUBCASE("non-positive values rejected") {
    CHECK_THROWS_AS(pft::constants_from_config("epsilon = 0\n"), pft::DomainError);
    CHECK_THROWS_AS(pft::constants_from_config("c = -1\n"), pft::DomainError);
  }

  SUBCASE("non-finite values rejected") {
    CHECK_THROWS_AS(pft::constants_from_config("hbar = inf\n"), pft::DomainError);
  }
}

TEST_CASE("validate rejects broken scales") {
  pft::Constants ct;
  ct.hbar = 0.0;
  CHECK_THROWS_AS(ct.validate(), pft::DomainError);
  ct.hbar = 1.0;
  ct.epsilon = -2.0;
  CHECK_THROWS_AS(ct.validate(), pft::DomainError);
}
