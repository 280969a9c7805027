#include "pft/quanta.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <tuple>

#include "kahan.hpp"
#include "pft/random.hpp"

namespace pft {

namespace {

void require_positive_mass(double mass) {
  if (!(std::isfinite(mass) && mass > 0.0)) {
    throw DomainError("particle mass must be finite and positive");
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double ParticleState::kinetic_energy() const {
  require_positive_mass(mass);
  return dot(momentum, momentum) / (2.0 * mass);
}

std::pair<ParticleState, ParticleState> elastic_collide_1d(const ParticleState& a,
                                                           const ParticleState& b) {
  require_positive_mass(a.mass);
  require_positive_mass(b.mass);

  // One shared impulse scalar updates both momenta, so the momentum sum is
  // conserved bitwise; equal velocities give exactly zero exchange.
  const double va = a.momentum[0] / a.mass;
  const double vb = b.momentum[0] / b.mass;
  const double reduced_twice = 2.0 * a.mass * b.mass / (a.mass + b.mass);
  const double impulse = reduced_twice * (vb - va);

  ParticleState out_a = a;
  ParticleState out_b = b;
  out_a.momentum[0] = a.momentum[0] + impulse;
  out_b.momentum[0] = b.momentum[0] - impulse;
  return {out_a, out_b};
}

QuantaRecord quanta_of(const ParticleState& before, const ParticleState& after,
                       const Constants& ct) {
  ct.validate();
  if (!(before.mass == after.mass)) {
    throw IdentityMismatch("snapshots describe different particles (mass changed)");
  }
  QuantaRecord q;
  q.delta_energy = after.kinetic_energy() - before.kinetic_energy();
  q.delta_momentum = after.momentum - before.momentum;
  q.delta_angular =
      cross(after.position, after.momentum) - cross(before.position, before.momentum);
  q.varpi = q.delta_energy / ct.hbar;
  q.kappa = (1.0 / ct.hbar) * q.delta_momentum;
  return q;
}

double power_of(const QuantaRecord& q, const Constants& ct) {
  return ct.power_scale() * q.delta_energy;
}

Vec3 force_of(const QuantaRecord& q, const Constants& ct) {
  return ct.power_scale() * q.delta_momentum;
}

Vec3 torque_of(const QuantaRecord& q, const Constants& ct) {
  return ct.power_scale() * q.delta_angular;
}

Vec3 impulse_of(const QuantaRecord& q, const Constants& ct) {
  return ct.tau0() * force_of(q, ct);
}

ConservationReport conservation_check(std::span<const QuantaRecord> records,
                                      double expected_energy_change) {
  detail::KahanSum px, py, pz, energy;
  detail::KahanSum momentum_scale, energy_scale;
  for (const auto& q : records) {
    px.add(q.delta_momentum[0]);
    py.add(q.delta_momentum[1]);
    pz.add(q.delta_momentum[2]);
    energy.add(q.delta_energy);
    momentum_scale.add(norm(q.delta_momentum));
    energy_scale.add(std::abs(q.delta_energy));
  }

  ConservationReport report;
  report.momentum_residual = norm(Vec3{px.value(), py.value(), pz.value()});
  report.energy_residual = std::abs(energy.value() - expected_energy_change);
  report.momentum_scale = momentum_scale.value();
  report.energy_scale = energy_scale.value();
  report.momentum_ok = report.momentum_residual <= 1e-12 * std::max(report.momentum_scale, 1.0);
  report.energy_ok = report.energy_residual <= 1e-12 * std::max(report.energy_scale, 1.0);
  return report;
}

Vec3 coarse_grained_force(std::span<const QuantaRecord> history, const Constants& ct) {
  ct.validate();
  if (history.empty()) {
    throw EmptyHistory("no transfer events to average over");
  }
  detail::KahanSum px, py, pz;
  for (const auto& q : history) {
    px.add(q.delta_momentum[0]);
    py.add(q.delta_momentum[1]);
    pz.add(q.delta_momentum[2]);
  }
  const double window = static_cast<double>(history.size()) * ct.tau0();
  return {px.value() / window, py.value() / window, pz.value() / window};
}

std::vector<CollisionEvent> generate_elastic_events(int count, std::uint64_t seed,
                                                    const Constants& ct) {
  ct.validate();
  if (count < 0) {
    throw DomainError("event count must be non-negative");
  }
  SeededRng rng(seed);
  std::vector<CollisionEvent> events;
  events.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    CollisionEvent ev;
    const double ma = rng.uniform(0.5, 2.0);
    const double mb = rng.uniform(0.5, 2.0);
    const double va = rng.uniform(-0.5, 0.5);
    const double vb = rng.uniform(-0.5, 0.5);
    const Vec3 contact{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

    ev.before_a = ParticleState{ma, {ma * va, 0.0, 0.0}, contact};
    ev.before_b = ParticleState{mb, {mb * vb, 0.0, 0.0}, contact};
    std::tie(ev.after_a, ev.after_b) = elastic_collide_1d(ev.before_a, ev.before_b);
    ev.quanta_a = quanta_of(ev.before_a, ev.after_a, ct);
    ev.quanta_b = quanta_of(ev.before_b, ev.after_b, ct);
    events.push_back(ev);
  }
  return events;
}

void write_event_trace(std::ostream& out, std::span<const CollisionEvent> events) {
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& ev = events[i];
    for (int particle = 0; particle < 2; ++particle) {
      const QuantaRecord& q = particle == 0 ? ev.quanta_a : ev.quanta_b;
      out << i << ' ' << particle << ' ' << format_double(q.delta_energy) << ' '
          << format_double(q.delta_momentum[0]) << ' ' << format_double(q.delta_momentum[1])
          << ' ' << format_double(q.delta_momentum[2]) << '\n';
    }
  }
}

}  // namespace pft
