#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "pft/constants.hpp"
#include "pft/errors.hpp"
#include "pft/vec3.hpp"

namespace pft {

/// Point particle in classical kinematics; collisions exchange momentum
/// instantaneously at fixed positions.
struct ParticleState {
  double mass = 1.0;
  Vec3 momentum{0.0, 0.0, 0.0};
  Vec3 position{0.0, 0.0, 0.0};

  /// |p|^2 / 2m; throws DomainError for non-positive mass.
  double kinetic_energy() const;
};

/// Increments exchanged in one interaction of a single particle, together
/// with the corresponding cyclic frequency varpi = dE/hbar and repetency
/// kappa = dp/hbar.
struct QuantaRecord {
  double delta_energy = 0.0;
  Vec3 delta_momentum{0.0, 0.0, 0.0};
  Vec3 delta_angular{0.0, 0.0, 0.0};
  double varpi = 0.0;
  Vec3 kappa{0.0, 0.0, 0.0};
};

/// Head-on elastic collision along x (transverse momentum passes through).
/// Both outgoing momenta are derived from one shared impulse scalar, so
/// momentum conservation holds bitwise. Throws DomainError on m <= 0.
std::pair<ParticleState, ParticleState> elastic_collide_1d(const ParticleState& a,
                                                           const ParticleState& b);

/// Quanta transferred to one particle between two snapshots. The snapshots
/// must describe the same particle: bitwise equal masses, else
/// IdentityMismatch.
QuantaRecord quanta_of(const ParticleState& before, const ParticleState& after,
                       const Constants& ct);

// Transfer-rate observables of a single record:
//   power    (eps/hbar) dE   = eps varpi
//   force    (eps/hbar) dp   = eps kappa
//   torque   (eps/hbar) dl
//   impulse  tau0 * force, which recovers dp itself
double power_of(const QuantaRecord& q, const Constants& ct);
Vec3 force_of(const QuantaRecord& q, const Constants& ct);
Vec3 torque_of(const QuantaRecord& q, const Constants& ct);
Vec3 impulse_of(const QuantaRecord& q, const Constants& ct);

/// Sums of transferred momentum and energy over a closed set of records,
/// compensated summation throughout. ok when both residuals stay below
/// 1e-12 relative to the summed magnitudes.
struct ConservationReport {
  double momentum_residual = 0.0;
  double energy_residual = 0.0;
  double momentum_scale = 0.0;
  double energy_scale = 0.0;
  bool momentum_ok = true;
  bool energy_ok = true;
  bool ok() const { return momentum_ok && energy_ok; }
};
ConservationReport conservation_check(std::span<const QuantaRecord> records,
                                      double expected_energy_change = 0.0);

/// Mean force over a history: (sum dp) / (n tau0). Throws EmptyHistory.
Vec3 coarse_grained_force(std::span<const QuantaRecord> history, const Constants& ct);

/// One generated two-body event: both particles before and after, plus the
/// per-particle quanta records.
struct CollisionEvent {
  ParticleState before_a, before_b;
  ParticleState after_a, after_b;
  QuantaRecord quanta_a, quanta_b;
};

/// Seeded ensemble of head-on elastic collisions with masses in [0.5, 2],
/// velocities in [-0.5, 0.5] and shared contact points in [-1, 1]^3.
std::vector<CollisionEvent> generate_elastic_events(int count, std::uint64_t seed,
                                                    const Constants& ct);

/// Event trace, one line per particle:
///   event_id particle_id dE dpx dpy dpz
void write_event_trace(std::ostream& out, std::span<const CollisionEvent> events);

}  // namespace pft
