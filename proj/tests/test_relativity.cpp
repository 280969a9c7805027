#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pft/random.hpp"
#include "pft/relativity.hpp"

using pft::Constants;
using pft::FourVector;
using pft::Vec3;

TEST_CASE("four momentum at rest") {
  const Constants ct = pft::natural_units();
  const FourVector p = pft::four_momentum(2.5, {0, 0, 0}, ct);
  CHECK(p.time == 2.5);  // E/c = m c, exact via hypot at zero momentum
  CHECK(p.spatial[0] == 0.0);
  CHECK(p.minkowski_norm2() == doctest::Approx(6.25).epsilon(1e-15));
}

TEST_CASE("massless four momentum is null") {
  const Constants ct = pft::natural_units();
  const FourVector p = pft::four_momentum(0.0, {3.0, 0.0, 4.0}, ct);
  CHECK(p.time == 5.0);  // |p|, the 3-4-5 triple is exact
  CHECK(p.minkowski_norm2() == 0.0);
}

TEST_CASE("negative inputs are rejected") {
  const Constants ct = pft::natural_units();
  CHECK_THROWS_AS(pft::four_momentum(-1.0, {0, 0, 0}, ct), pft::DomainError);
  CHECK_THROWS_AS(pft::power_from_force(1.0, -1.0, ct), pft::DomainError);
}

TEST_CASE("four force rescales the four momentum componentwise") {
  Constants ct = pft::natural_units();
  ct.hbar = 2.0;
  ct.epsilon = 0.74;
  const FourVector p = pft::four_momentum(1.3, {0.4, -0.2, 0.9}, ct);
  const FourVector f = pft::four_force(p, ct);
  const double scale = ct.power_scale();
  CHECK(f.time == doctest::Approx(scale * p.time).epsilon(1e-15));
  for (int a = 0; a < 3; ++a) {
    CHECK(f.spatial[a] == doctest::Approx(scale * p.spatial[a]).epsilon(1e-15));
  }
}

TEST_CASE("power force relation on a pythagorean triple") {
  // natural units, m = 4, |F| = 3: P = sqrt(9 + 16) = 5 exactly
  const Constants ct = pft::natural_units();
  CHECK(pft::power_from_force(3.0, 4.0, ct) == 5.0);
  CHECK(pft::power_from_force(Vec3{0.0, 3.0, 0.0}, 4.0, ct) == 5.0);
}

TEST_CASE("rest power away from natural units") {
  Constants ct = pft::natural_units();
  ct.hbar = 0.5;
  ct.epsilon = 2.0;
  ct.c = 3.0;
  const double m = 1.7;
  // P(F = 0) = (eps/hbar) m c^2
  CHECK(pft::power_from_force(0.0, m, ct) ==
        doctest::Approx(ct.power_scale() * m * ct.c * ct.c).epsilon(1e-15));
}

TEST_CASE("massless power is force magnitude times c") {
  Constants ct = pft::natural_units();
  ct.c = 2.0;
  const Vec3 f{0.3, -1.2, 0.4};
  const double mag = std::sqrt(0.3 * 0.3 + 1.2 * 1.2 + 0.4 * 0.4);
  CHECK(pft::power_from_force(f, 0.0, ct) == doctest::Approx(mag * ct.c).epsilon(1e-15));
}

TEST_CASE("two routes to the power agree on random samples") {
  Constants ct = pft::natural_units();
  ct.epsilon = 0.37;
  pft::SeededRng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const double m = rng.uniform(0.1, 10.0);
    const Vec3 p{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};

    // route one: scale the on-shell four momentum and read the time slot
    const FourVector f = pft::four_force(pft::four_momentum(m, p, ct), ct);
    const double via_momentum = f.time * ct.c;

    // route two: mass-shell formula from the spatial force magnitude
    const double via_force = pft::power_from_force(f.spatial, m, ct);

    CHECK(std::abs(via_momentum - via_force) <= 1e-12 * via_momentum);
  }
}

TEST_CASE("minkowski norm of the four force is set by the rest mass") {
  Constants ct = pft::natural_units();
  ct.epsilon = 5.0;
  pft::SeededRng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const double m = rng.uniform(0.5, 10.0);
    const Vec3 p{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const FourVector f = pft::four_force(pft::four_momentum(m, p, ct), ct);
    const double expected = std::pow(ct.power_scale() * m * ct.c * ct.c / ct.c, 2);
    CHECK(f.minkowski_norm2() == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("operator route on a spacetime plane wave") {
  Constants ct = pft::natural_units();
  ct.epsilon = 0.37;
  const auto check = pft::four_force_plane_wave_check(2, 1, 64, ct);
  CHECK(check.residual < 1e-10);
  CHECK(check.power_over_c == doctest::Approx(ct.epsilon * 2.0 / ct.c).epsilon(1e-12));
  CHECK(check.force == doctest::Approx(ct.epsilon * 1.0).epsilon(1e-12));
}

TEST_CASE("operator route is linear in epsilon") {
  Constants one = pft::natural_units();
  Constants five = pft::natural_units();
  five.epsilon = 5.0;
  const auto a = pft::four_force_plane_wave_check(3, 2, 32, one);
  const auto b = pft::four_force_plane_wave_check(3, 2, 32, five);
  CHECK(b.power_over_c == doctest::Approx(5.0 * a.power_over_c).epsilon(1e-14));
  CHECK(b.force == doctest::Approx(5.0 * a.force).epsilon(1e-14));
}
