#pragma once

#include "pft/constants.hpp"
#include "pft/errors.hpp"
#include "pft/vec3.hpp"

namespace pft {

/// Contravariant four-vector with metric (+,-,-,-).
struct FourVector {
  double time = 0.0;
  Vec3 spatial{0.0, 0.0, 0.0};

  double minkowski_norm2() const;
};

/// On-shell four-momentum (E/c, p) with E = sqrt(|p|^2 c^2 + m^2 c^4).
/// Throws DomainError for negative mass; m = 0 gives a null vector.
FourVector four_momentum(double mass, const Vec3& momentum, const Constants& ct);

/// Four-force (eps/hbar) p^mu; components (P/c, F).
FourVector four_force(const FourVector& p, const Constants& ct);

/// Power from the force magnitude along the mass shell:
/// P = sqrt(F^2 c^2 + (eps/hbar)^2 m^2 c^4). Throws DomainError on m < 0.
double power_from_force(double force_magnitude, double mass, const Constants& ct);
double power_from_force(const Vec3& force, double mass, const Constants& ct);

/// Eigenvalue check of the operator form i eps (d_t/c, -d_x) on a plane
/// wave exp(i(k x - w t)) over a periodic spacetime square of side 2 pi,
/// with w = time_mode and k = space_mode. residual is the worst pointwise
/// eigen-equation defect; the components report the Rayleigh quotients,
/// expected at (eps w / c, eps k).
struct SpacetimeEigenCheck {
  double power_over_c = 0.0;
  double force = 0.0;
  double residual = 0.0;
};
SpacetimeEigenCheck four_force_plane_wave_check(int time_mode, int space_mode, int points,
                                                const Constants& ct);

}  // namespace pft
