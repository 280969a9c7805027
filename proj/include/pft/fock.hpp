#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "pft/constants.hpp"
#include "pft/errors.hpp"
#include "pft/vec3.hpp"

namespace pft {

/// One radiation mode: wavevector, polarization index (1 or 2) and the
/// dispersion frequency omega = c|k|.
struct Mode {
  Vec3 k{0.0, 0.0, 0.0};
  int polarization = 1;
  double omega = 0.0;
};

/// Finite set of distinct modes with a shared occupation cutoff.
struct ModeSet {
  std::vector<Mode> modes;
  int cutoff = 1;

  /// Lines "kx ky kz sigma" with sigma the polarization index; omega is
  /// computed from the dispersion relation. Throws ParseError on malformed
  /// lines, DomainError on duplicate (k, sigma) pairs, a polarization
  /// outside {1, 2} or cutoff < 1.
  static ModeSet from_config(std::string_view text, int cutoff, const Constants& ct);

  void validate() const;
};

/// Occupation-number state over a ModeSet, one entry per mode.
struct FockState {
  std::vector<int> occupations;
};

/// Radiated power eigenvalue eps sum omega_i n_i on a number state; the
/// state itself is returned unchanged (number states are eigenstates).
/// Throws ModeMismatch when occupations do not fit the ModeSet.
std::pair<double, FockState> apply_em_power(const FockState& state, const ModeSet& ms,
                                            const Constants& ct);

/// Force eigenvalue eps sum k_i n_i, componentwise.
std::pair<Vec3, FockState> apply_em_force(const FockState& state, const ModeSet& ms,
                                          const Constants& ct);

/// Energy and momentum eigenvalues of the same state under the standard
/// quadratic forms hbar sum omega n and hbar sum k n (zero-point terms
/// excluded throughout, matching the power and force forms above).
double em_energy(const FockState& state, const ModeSet& ms, const Constants& ct);
Vec3 em_momentum(const FockState& state, const ModeSet& ms, const Constants& ct);

/// Exhaustive sweep over all occupation states of the set, comparing the
/// power and force eigenvalues against (eps/hbar) times energy and
/// momentum. The factored evaluation makes both sides identical doubles
/// when hbar = 1, so the tolerance is zero there and 4 ulp-scale otherwise.
/// Guards: at most 4 modes and cutoff <= 5 (DomainError).
struct EmConsistencyReport {
  std::size_t states_checked = 0;
  double max_power_residual = 0.0;
  double max_force_residual = 0.0;
  double tolerance = 0.0;
  bool all_pass = true;
};
EmConsistencyReport em_consistency_check(const ModeSet& ms, const Constants& ct);

}  // namespace pft
