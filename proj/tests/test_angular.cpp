#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "pft/angular.hpp"
#include "pft/errors.hpp"

using pft::Constants;
using pft::Multiplet;

namespace {

double max_entry(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("l = 1 matrices match the hand-computed values") {
  // basis m = -1, 0, 1; L+- entries hbar sqrt(l(l+1) - m(m+-1)) give
  // off-diagonals hbar/sqrt(2) for lx, +-i hbar/sqrt(2) for ly.
  const Multiplet m = pft::multiplet(1, pft::natural_units());
  const double s = 1.0 / std::sqrt(2.0);

  Eigen::MatrixXcd lx(3, 3), ly(3, 3), lz(3, 3);
  lx << 0, s, 0, s, 0, s, 0, s, 0;
  using C = std::complex<double>;
  ly << C(0, 0), C(0, s), C(0, 0), C(0, -s), C(0, 0), C(0, s), C(0, 0), C(0, -s), C(0, 0);
  lz << -1, 0, 0, 0, 0, 0, 0, 0, 1;

  CHECK(max_entry(m.lx - lx) < 1e-15);
  CHECK(max_entry(m.ly - ly) < 1e-15);
  CHECK(max_entry(m.lz - lz) == 0.0);
}

TEST_CASE("torque matrices are the angular ones rescaled, entrywise") {
  Constants ct = pft::natural_units();
  ct.epsilon = 0.37;
  const Multiplet m = pft::multiplet(3, ct);
  for (int axis = 0; axis < 3; ++axis) {
    // built by scaling, so at hbar = 1 the entries agree bitwise
    CHECK((m.torque(axis) - ct.epsilon * m.angular(axis)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("commutation relations across the ladder") {
  for (int l = 0; l <= 10; ++l) {
    const Multiplet m = pft::multiplet(l, pft::natural_units());
    CHECK(pft::torque_algebra_residual(m) < 1e-13);
    CHECK(pft::mixed_commutator_residual(m) < 1e-13);
  }
}

TEST_CASE("commutation relations away from natural units") {
  Constants ct = pft::natural_units();
  ct.hbar = 2.0;
  ct.epsilon = 5.0;
  for (int l : {1, 2, 5}) {
    const Multiplet m = pft::multiplet(l, ct);
    const double scale = ct.epsilon * ct.epsilon * l * (l + 1);
    CHECK(pft::torque_algebra_residual(m) < 1e-13 * std::max(1.0, scale));
    CHECK(pft::mixed_commutator_residual(m) < 1e-13 * std::max(1.0, scale));
  }
}

TEST_CASE("casimir and magnitude") {
  for (double eps : {1.0, 0.37, 5.0}) {
    Constants ct = pft::natural_units();
    ct.epsilon = eps;
    for (int l : {1, 2, 3}) {
      const Multiplet m = pft::multiplet(l, ct);

      // T.T must be eps^2 l(l+1) times the identity
      Eigen::MatrixXcd casimir = m.tx * m.tx + m.ty * m.ty + m.tz * m.tz;
      const double expected = eps * eps * l * (l + 1);
      casimir -= expected * Eigen::MatrixXcd::Identity(m.dimension(), m.dimension());
      CHECK(max_entry(casimir) < 1e-12 * std::max(1.0, expected));

      const double mag = pft::torque_magnitude(l, ct);
      CHECK(mag == doctest::Approx(eps * std::sqrt(l * (l + 1.0))).epsilon(1e-14));
      CHECK(pft::torque_magnitude_from_matrices(m) ==
            doctest::Approx(mag).epsilon(1e-12));
    }
  }
}

TEST_CASE("the z component is diagonal with integer multiples") {
  Constants ct = pft::natural_units();
  ct.epsilon = 2.0;
  const int l = 2;
  const Multiplet m = pft::multiplet(l, ct);
  for (int row = 0; row < m.dimension(); ++row) {
    const double mval = row - l;
    CHECK(m.tz(row, row) == std::complex<double>(ct.epsilon * mval, 0.0));
    CHECK(m.lz(row, row) == std::complex<double>(ct.hbar * mval, 0.0));
  }
  Eigen::MatrixXcd off = m.tz;
  off.diagonal().setZero();
  CHECK(max_entry(off) == 0.0);
}

TEST_CASE("hermiticity") {
  const Multiplet m = pft::multiplet(4, pft::natural_units());
  CHECK(max_entry(m.tx - m.tx.adjoint()) == 0.0);
  CHECK(max_entry(m.ty - m.ty.adjoint()) == 0.0);
  CHECK(max_entry(m.tz - m.tz.adjoint()) == 0.0);
}

TEST_CASE("multiplet domain") {
  CHECK_THROWS_AS(pft::multiplet(-1, pft::natural_units()), pft::DomainError);
  CHECK_THROWS_AS(pft::multiplet(51, pft::natural_units()), pft::DomainError);
  CHECK_NOTHROW(pft::multiplet(50, pft::natural_units()));

  const Multiplet m = pft::multiplet(1, pft::natural_units());
  CHECK_THROWS_AS(m.angular(3), pft::DomainError);
  CHECK_THROWS_AS(m.torque(-1), pft::DomainError);
}

TEST_CASE("levi civita") {
  CHECK(pft::levi_civita(0, 1, 2) == 1);
  CHECK(pft::levi_civita(1, 2, 0) == 1);
  CHECK(pft::levi_civita(2, 1, 0) == -1);
  CHECK(pft::levi_civita(0, 0, 2) == 0);
  CHECK(pft::levi_civita(1, 1, 1) == 0);
}
