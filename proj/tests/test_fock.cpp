#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pft/fock.hpp"

using pft::Constants;
using pft::FockState;
using pft::ModeSet;

namespace {

ModeSet two_modes(int cutoff, const Constants& ct) {
  return ModeSet::from_config("1 0 0 1\n0 2 0 2\n", cutoff, ct);
}

}  // namespace

TEST_CASE("mode config parsing") {
  const Constants ct = pft::natural_units();

  SUBCASE("comments and blank lines are skipped") {
    const ModeSet ms =
        ModeSet::from_config("1 0 0 1   # along x\n\n  \n0 2 0 2\n# trailing comment\n", 2, ct);
    REQUIRE(ms.modes.size() == 2);
    CHECK(ms.modes[0].omega == 1.0);  // c |k| with c = 1 and axis-aligned k
    CHECK(ms.modes[1].omega == 2.0);
    CHECK(ms.modes[0].polarization == 1);
    CHECK(ms.modes[1].polarization == 2);
  }

  SUBCASE("dispersion scales with c") {
    Constants fast = pft::natural_units();
    fast.c = 3.0;
    const ModeSet ms = ModeSet::from_config("0 0 2 1\n", 1, fast);
    CHECK(ms.modes[0].omega == 6.0);
  }

  SUBCASE("malformed lines") {
    CHECK_THROWS_AS(ModeSet::from_config("1 0 0\n", 1, ct), pft::ParseError);
    CHECK_THROWS_AS(ModeSet::from_config("1 0 0 1 junk\n", 1, ct), pft::ParseError);
    CHECK_THROWS_AS(ModeSet::from_config("a b c 1\n", 1, ct), pft::ParseError);
  }

  SUBCASE("domain violations") {
    CHECK_THROWS_AS(ModeSet::from_config("1 0 0 1\n1 0 0 1\n", 1, ct), pft::DomainError);
    CHECK_THROWS_AS(ModeSet::from_config("1 0 0 3\n", 1, ct), pft::DomainError);
    CHECK_THROWS_AS(ModeSet::from_config("1 0 0 1\n", 0, ct), pft::DomainError);
    // same k with the other polarization is a distinct mode
    CHECK_NOTHROW(ModeSet::from_config("1 0 0 1\n1 0 0 2\n", 1, ct));
  }
}

TEST_CASE("number states are power and force eigenstates") {
  Constants ct = pft::natural_units();
  ct.epsilon = 0.37;
  const ModeSet ms = two_modes(2, ct);

  // hand enumeration of all nine occupation states of the two-mode set:
  // eigenvalues eps (w1 n1 + w2 n2) and eps (k1 n1 + k2 n2)
  for (int n1 = 0; n1 <= 2; ++n1) {
    for (int n2 = 0; n2 <= 2; ++n2) {
      const FockState state{{n1, n2}};
      const auto [power, out] = pft::apply_em_power(state, ms, ct);
      const double expected = ct.epsilon * (1.0 * n1 + 2.0 * n2);
      CHECK(power == expected);
      CHECK(out.occupations == state.occupations);  // eigenstate passes through

      const auto [force, out2] = pft::apply_em_force(state, ms, ct);
      CHECK(force[0] == ct.epsilon * (1.0 * n1 + 0.0 * n2));
      CHECK(force[1] == ct.epsilon * (0.0 * n1 + 2.0 * n2));
      CHECK(force[2] == 0.0);
    }
  }
}

TEST_CASE("vacuum carries nothing") {
  const Constants ct = pft::natural_units();
  const ModeSet ms = two_modes(3, ct);
  const FockState vacuum{{0, 0}};
  CHECK(pft::apply_em_power(vacuum, ms, ct).first == 0.0);
  CHECK(pft::apply_em_force(vacuum, ms, ct).first == pft::Vec3{0.0, 0.0, 0.0});
  CHECK(pft::em_energy(vacuum, ms, ct) == 0.0);
}

TEST_CASE("opposite wavevectors cancel the force exactly") {
  Constants ct = pft::natural_units();
  ct.epsilon = 5.0;
  const ModeSet ms = ModeSet::from_config("0.75 0 0 1\n-0.75 0 0 1\n", 4, ct);
  for (int n = 0; n <= 4; ++n) {
    const FockState state{{n, n}};
    const pft::Vec3 f = pft::apply_em_force(state, ms, ct).first;
    CHECK(f[0] == 0.0);
    // the power adds instead: both modes share omega = 0.75
    CHECK(pft::apply_em_power(state, ms, ct).first ==
          doctest::Approx(ct.epsilon * 1.5 * n).epsilon(1e-15));
  }
}

TEST_CASE("occupation guards") {
  const Constants ct = pft::natural_units();
  const ModeSet ms = two_modes(2, ct);
  CHECK_THROWS_AS(pft::apply_em_power(FockState{{1}}, ms, ct), pft::ModeMismatch);
  CHECK_THROWS_AS(pft::apply_em_power(FockState{{1, 3}}, ms, ct), pft::ModeMismatch);
  CHECK_THROWS_AS(pft::apply_em_power(FockState{{-1, 0}}, ms, ct), pft::ModeMismatch);
}

TEST_CASE("exhaustive consistency sweep") {
  SUBCASE("natural units demand exact equality") {
    Constants ct = pft::natural_units();
    ct.epsilon = 0.37;
    const ModeSet ms = two_modes(2, ct);
    const auto report = pft::em_consistency_check(ms, ct);
    CHECK(report.states_checked == 9);
    CHECK(report.tolerance == 0.0);
    CHECK(report.max_power_residual == 0.0);
    CHECK(report.max_force_residual == 0.0);
    CHECK(report.all_pass);
  }

  SUBCASE("away from hbar = 1 a few ulp are allowed") {
    Constants ct = pft::natural_units();
    ct.hbar = 2.0;
    ct.epsilon = 0.37;
    const ModeSet ms = two_modes(3, ct);
    const auto report = pft::em_consistency_check(ms, ct);
    CHECK(report.states_checked == 16);
    CHECK(report.tolerance > 0.0);
    CHECK(report.all_pass);
  }

  SUBCASE("sweep size guards") {
    const Constants ct = pft::natural_units();
    const ModeSet big = ModeSet::from_config(
        "1 0 0 1\n2 0 0 1\n3 0 0 1\n4 0 0 1\n5 0 0 1\n", 1, ct);
    CHECK_THROWS_AS(pft::em_consistency_check(big, ct), pft::DomainError);

    const ModeSet deep = two_modes(6, ct);
    CHECK_THROWS_AS(pft::em_consistency_check(deep, ct), pft::DomainError);

    ModeSet empty;
    empty.cutoff = 1;
    CHECK_THROWS_AS(pft::em_consistency_check(empty, ct), pft::DomainError);
  }
}
