#include "pft/fock.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace pft {

namespace {

void require_fits(const FockState& state, const ModeSet& ms) {
  if (state.occupations.size() != ms.modes.size()) {
    throw ModeMismatch("state has " + std::to_string(state.occupations.size()) +
                       " occupations for " + std::to_string(ms.modes.size()) + " modes");
  }
  for (const int n : state.occupations) {
    if (n < 0 || n > ms.cutoff) {
      throw ModeMismatch("occupation " + std::to_string(n) + " outside [0, cutoff = " +
                         std::to_string(ms.cutoff) + "]");
    }
  }
}

// sum_i weight(mode_i) * n_i in fixed mode order; the shared loop shape
// keeps power/energy and force/momentum sums bit-identical where the
// weights are.
template <class WeightFn>
double weighted_occupation_sum(const FockState& state, const ModeSet& ms, WeightFn&& weight) {
  double sum = 0.0;
  for (std::size_t i = 0; i < ms.modes.size(); ++i) {
    sum += weight(ms.modes[i]) * static_cast<double>(state.occupations[i]);
  }
  return sum;
}

}  // namespace

void ModeSet::validate() const {
  if (cutoff < 1) {
    throw DomainError("occupation cutoff must be at least 1");
  }
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const Mode& m = modes[i];
    if (m.polarization != 1 && m.polarization != 2) {
      throw DomainError("polarization index must be 1 or 2");
    }
    if (!(std::isfinite(m.omega) && m.omega >= 0.0)) {
      throw DomainError("mode frequency must be finite and non-negative");
    }
    for (std::size_t j = i + 1; j < modes.size(); ++j) {
      if (modes[j].k == m.k && modes[j].polarization == m.polarization) {
        throw DomainError("modes must be distinct as (k, polarization) pairs");
      }
    }
  }
}

ModeSet ModeSet::from_config(std::string_view text, int cutoff, const Constants& ct) {
  ct.validate();
  ModeSet ms;
  ms.cutoff = cutoff;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;  // blank or comment-only line
    }
    std::istringstream row(line);
    Mode mode;
    if (!(row >> mode.k[0] >> mode.k[1] >> mode.k[2] >> mode.polarization)) {
      throw ParseError("expected 'kx ky kz sigma', got '" + line + "'");
    }
    std::string trailing;
    if (row >> trailing) {
      throw ParseError("trailing tokens on mode line '" + line + "'");
    }
    mode.omega = ct.c * norm(mode.k);
    ms.modes.push_back(mode);
  }

  ms.validate();
  return ms;
}

std::pair<double, FockState> apply_em_power(const FockState& state, const ModeSet& ms,
                                            const Constants& ct) {
  ct.validate();
  ms.validate();
  require_fits(state, ms);
  const double sum = weighted_occupation_sum(state, ms, [](const Mode& m) { return m.omega; });
  return {ct.epsilon * sum, state};
}

std::pair<Vec3, FockState> apply_em_force(const FockState& state, const ModeSet& ms,
                                          const Constants& ct) {
  ct.validate();
  ms.validate();
  require_fits(state, ms);
  Vec3 value{0.0, 0.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    value[a] =
        ct.epsilon * weighted_occupation_sum(state, ms, [a](const Mode& m) { return m.k[a]; });
  }
  return {value, state};
}

double em_energy(const FockState& state, const ModeSet& ms, const Constants& ct) {
  ct.validate();
  ms.validate();
  require_fits(state, ms);
  return ct.hbar * weighted_occupation_sum(state, ms, [](const Mode& m) { return m.omega; });
}

Vec3 em_momentum(const FockState& state, const ModeSet& ms, const Constants& ct) {
  ct.validate();
  ms.validate();
  require_fits(state, ms);
  Vec3 value{0.0, 0.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    value[a] =
        ct.hbar * weighted_occupation_sum(state, ms, [a](const Mode& m) { return m.k[a]; });
  }
  return value;
}

EmConsistencyReport em_consistency_check(const ModeSet& ms, const Constants& ct) {
  ct.validate();
  ms.validate();
  if (ms.modes.empty() || ms.modes.size() > 4) {
    throw DomainError("exhaustive sweep handles 1 to 4 modes");
  }
  if (ms.cutoff > 5) {
    throw DomainError("exhaustive sweep handles cutoff <= 5");
  }

  EmConsistencyReport report;
  // Both routes reduce to scale * (weighted occupation sum); with hbar = 1
  // the scale factors are the same double, so residuals must vanish. Away
  // from hbar = 1 the two evaluation orders may differ by a few ulp.
  const double scale = ct.power_scale();
  bool all_pass = true;

  FockState state{std::vector<int>(ms.modes.size(), 0)};
  bool done = false;
  while (!done) {
    const double power = apply_em_power(state, ms, ct).first;
    const Vec3 force = apply_em_force(state, ms, ct).first;
    const double energy = em_energy(state, ms, ct);
    const Vec3 momentum = em_momentum(state, ms, ct);

    const double power_residual = std::abs(power - scale * energy);
    const double force_residual = max_abs(force - scale * momentum);
    const double magnitude = std::max(std::abs(power), max_abs(force));
    const double tol =
        ct.hbar == 1.0 ? 0.0 : 4.0 * 0x1.0p-52 * std::max(1.0, magnitude);
    report.tolerance = std::max(report.tolerance, tol);
    all_pass = all_pass && power_residual <= tol && force_residual <= tol;
    report.max_power_residual = std::max(report.max_power_residual, power_residual);
    report.max_force_residual = std::max(report.max_force_residual, force_residual);
    ++report.states_checked;

    // Odometer over occupations, least significant mode first.
    done = true;
    for (std::size_t i = 0; i < state.occupations.size(); ++i) {
      if (state.occupations[i] < ms.cutoff) {
        ++state.occupations[i];
        for (std::size_t j = 0; j < i; ++j) {
          state.occupations[j] = 0;
        }
        done = false;
        break;
      }
    }
  }

  report.all_pass = all_pass;
  return report;
}

}  // namespace pft
