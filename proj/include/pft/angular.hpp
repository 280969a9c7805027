#pragma once

#include <Eigen/Dense>

#include "pft/constants.hpp"

namespace pft {

/// Angular momentum and torque matrices on a (2l+1)-dimensional multiplet,
/// basis ordered m = -l..l. Built from ladder operators, so L_z is exactly
/// diagonal and T = (eps/hbar) L holds entrywise by construction.
struct Multiplet {
  int l = 0;
  double hbar = 1.0;
  double epsilon = 1.0;
  Eigen::MatrixXcd lx, ly, lz;
  Eigen::MatrixXcd tx, ty, tz;

  int dimension() const { return 2 * l + 1; }
  const Eigen::MatrixXcd& angular(int axis) const;
  const Eigen::MatrixXcd& torque(int axis) const;
};

/// Throws DomainError unless 0 <= l <= 50.
Multiplet multiplet(int l, const Constants& ct);

/// Max entry of [T_g, T_b] - i eps sum_v levi(g,b,v) T_v over all g, b.
double torque_algebra_residual(const Multiplet& m);

/// Max entry of [L_g, T_b] - i hbar sum_v levi(g,b,v) T_v over all g, b.
double mixed_commutator_residual(const Multiplet& m);

/// eps sqrt(l(l+1)).
double torque_magnitude(int l, const Constants& ct);

/// sqrt of the largest eigenvalue of T.T; equals torque_magnitude on an
/// exact multiplet and serves as its matrix-side cross-check.
double torque_magnitude_from_matrices(const Multiplet& m);

/// Levi-Civita symbol on indices 0..2.
int levi_civita(int a, int b, int c);

}  // namespace pft
