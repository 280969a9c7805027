#pragma once

#include <array>
#include <vector>

#include "pft/constants.hpp"
#include "pft/grid.hpp"
#include "pft/random.hpp"

namespace pft {

// Derivative kernels on periodic grids. The spectral backend is exact for
// band-limited data (Nyquist bin dropped for odd derivatives); FD2 and FD4
// are centered stencils with h^2 and h^4 truncation error.
WaveFunction derivative(const WaveFunction& psi, int axis, Backend backend);
std::vector<WaveFunction> gradient(const WaveFunction& psi, Backend backend = Backend::Spectral);
WaveFunction laplacian(const WaveFunction& psi, Backend backend = Backend::Spectral);

// Operator applications, one component per grid axis where vector valued.
//   momentum      -i hbar d/dx
//   force         -i eps d/dx
//   free energy   -(hbar^2 / 2m) Lap
//   free power    -(hbar eps / 2m) Lap
std::vector<WaveFunction> apply_momentum(const WaveFunction& psi, const Constants& ct,
                                         Backend backend = Backend::Spectral);
std::vector<WaveFunction> apply_force(const WaveFunction& psi, const Constants& ct,
                                      Backend backend = Backend::Spectral);
WaveFunction apply_hamiltonian_free(const WaveFunction& psi, double mass, const Constants& ct,
                                    Backend backend = Backend::Spectral);
WaveFunction apply_power_free(const WaveFunction& psi, double mass, const Constants& ct,
                              Backend backend = Backend::Spectral);

// Orbital operators -i hbar (r x grad) and -i eps (r x grad) on 3d grids.
// Both demand boundary amplitudes below 1e-12 (EdgeLeakage otherwise)
// because r x grad is not periodic.
std::vector<WaveFunction> apply_angular_momentum_grid(const WaveFunction& psi, const Constants& ct);
std::vector<WaveFunction> apply_torque_grid(const WaveFunction& psi, const Constants& ct);

// Handle factory for the catalog above plus multiplicative position.
Operator position_op(int axis);
Operator momentum_op(int axis, const Constants& ct, Backend backend = Backend::Spectral);
Operator force_op(int axis, const Constants& ct, Backend backend = Backend::Spectral);
Operator hamiltonian_free_op(double mass, const Constants& ct, Backend backend = Backend::Spectral);
Operator power_free_op(double mass, const Constants& ct, Backend backend = Backend::Spectral);
Operator ho_hamiltonian_op(double mass, double omega, const Constants& ct,
                           Backend backend = Backend::Spectral);
/// factor * inner, e.g. (eps/hbar) H as the second route to the power map.
Operator scaled_op(Complex factor, std::string label, Operator inner);

/// Wavevector of integer mode numbers, k_a = 2 pi n_a / L. Throws
/// IncommensurateWavevector when |n_a| >= N/2 (outside the resolved band)
/// and DomainError when a mode rides an axis beyond the grid dimension.
Vec3 commensurate_wavevector(const GridSpec& grid, const std::array<int, 3>& modes);

/// Normalized plane wave exp(i k.x)/sqrt(V) at time tag 0.
WaveFunction plane_wave(const GridSpec& grid, const std::array<int, 3>& modes);
/// Free-particle plane wave exp(i(k.x - w t))/sqrt(V), w = hbar|k|^2/2m.
WaveFunction plane_wave(const GridSpec& grid, const std::array<int, 3>& modes, double time,
                        double mass, const Constants& ct);
/// As above from a raw wavevector; components must sit within 1e-9 of a
/// commensurate mode or IncommensurateWavevector is thrown.
WaveFunction plane_wave_k(const GridSpec& grid, const Vec3& wavevector);

/// n-th oscillator eigenstate on a 1d grid via the normalized three-term
/// recurrence, then grid-normalized. n <= 20; the box must keep boundary
/// amplitudes below 1e-12 (EdgeLeakage otherwise).
WaveFunction ho_eigenstate(int n, double omega, double mass, const GridSpec& grid,
                           const Constants& ct);

/// Normalized packet prod_a exp(-(x_a-c_a)^2/(4 sigma^2) + i k_a (x_a-c_a)).
/// sigma is the position standard deviation. Requires sigma >= 4h and at
/// least 8 sigma between the center and every box edge (EdgeLeakage).
WaveFunction gaussian_packet(const Vec3& center, const Vec3& carrier, double sigma,
                             const GridSpec& grid);

/// Exact free propagator exp(-i hbar |k|^2 t / 2m) per mode; advances the
/// time tag by dt.
WaveFunction evolve_free(const WaveFunction& psi, double dt, double mass, const Constants& ct);

/// Normalized state with independent uniform spectral coefficients on every
/// mode with |n_a| <= max_mode and zero outside that band. Draws follow the
/// flat spectral ordering, so a fixed rng state fixes the state. Requires
/// 0 <= max_mode <= N/2 - 1.
WaveFunction random_band_limited_state(const GridSpec& grid, int max_mode, SeededRng& rng);

/// Rayleigh quotient and max pointwise residual |op psi - lambda psi|.
struct EigenCheck {
  Complex rayleigh;
  double residual_inf;
};
EigenCheck eigen_check(const Operator& op, const WaveFunction& psi);
EigenCheck eigen_check_applied(const WaveFunction& applied, const WaveFunction& psi);

}  // namespace pft
