#include "pft/relativity.hpp"

#include <cmath>
#include <numbers>

#include "pft/diffops.hpp"
#include "pft/grid.hpp"

namespace pft {

double FourVector::minkowski_norm2() const { return time * time - dot(spatial, spatial); }

FourVector four_momentum(double mass, const Vec3& momentum, const Constants& ct) {
  ct.validate();
  if (!(std::isfinite(mass) && mass >= 0.0)) {
    throw DomainError("mass must be finite and non-negative");
  }
  // E/c = sqrt(|p|^2 + m^2 c^2), via hypot to stay exact in the massless
  // and rest limits.
  const double pc = norm(momentum);
  const double e_over_c = std::hypot(pc, mass * ct.c);
  return FourVector{e_over_c, momentum};
}

FourVector four_force(const FourVector& p, const Constants& ct) {
  ct.validate();
  const double scale = ct.power_scale();
  return FourVector{scale * p.time, scale * p.spatial};
}

double power_from_force(double force_magnitude, double mass, const Constants& ct) {
  ct.validate();
  if (!(std::isfinite(mass) && mass >= 0.0)) {
    throw DomainError("mass must be finite and non-negative");
  }
  if (!(std::isfinite(force_magnitude) && force_magnitude >= 0.0)) {
    throw DomainError("force magnitude must be finite and non-negative");
  }
  return std::hypot(force_magnitude * ct.c, ct.power_scale() * mass * ct.c * ct.c);
}

double power_from_force(const Vec3& force, double mass, const Constants& ct) {
  return power_from_force(norm(force), mass, ct);
}

SpacetimeEigenCheck four_force_plane_wave_check(int time_mode, int space_mode, int points,
                                                const Constants& ct) {
  ct.validate();
  // Periodic spacetime square of circumference 2 pi on both axes, axis 0
  // carrying ct-like time. Integer modes are commensurate by construction.
  GridSpec grid{.dim = 2, .points = points, .length = 2.0 * std::numbers::pi};
  grid.validate();
  const Vec3 k = commensurate_wavevector(grid, {time_mode, space_mode, 0});
  const double omega = k[0];
  const double kx = k[1];

  // psi(t, x) = exp(i(kx x - w t)) / sqrt(V): reuse the spatial plane wave
  // with mode (-time_mode, space_mode) so axis 0 contributes -w t.
  const WaveFunction psi = plane_wave(grid, {-time_mode, space_mode, 0});

  // Time component i eps d_t / c, space component -i eps d_x.
  const WaveFunction dt = derivative(psi, 0, Backend::Spectral);
  const WaveFunction dx = derivative(psi, 1, Backend::Spectral);
  const WaveFunction time_side = Complex(0.0, ct.epsilon / ct.c) * dt;
  const WaveFunction space_side = Complex(0.0, -ct.epsilon) * dx;

  const EigenCheck time_check = eigen_check_applied(time_side, psi);
  const EigenCheck space_check = eigen_check_applied(space_side, psi);

  SpacetimeEigenCheck out;
  out.power_over_c = time_check.rayleigh.real();
  out.force = space_check.rayleigh.real();
  const double expected_time = ct.epsilon * omega / ct.c;
  const double expected_space = ct.epsilon * kx;
  out.residual = std::max({time_check.residual_inf, space_check.residual_inf,
                           std::abs(out.power_over_c - expected_time),
                           std::abs(out.force - expected_space),
                           std::abs(time_check.rayleigh.imag()),
                           std::abs(space_check.rayleigh.imag())});
  return out;
}

}  // namespace pft
