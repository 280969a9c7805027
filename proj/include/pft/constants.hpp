#pragma once

#include <string_view>

namespace pft {

/// Physical scales shared by every module. epsilon is the energy constant
/// that converts transferred quanta into power, force and torque; tau0 is
/// the matching elementary transfer interval hbar/epsilon.
struct Constants {
  double hbar = 1.0;
  double epsilon = 1.0;
  double c = 1.0;

  double tau0() const { return hbar / epsilon; }
  /// epsilon/hbar, the factor mapping momentum-like onto force-like operators.
  double power_scale() const { return epsilon / hbar; }

  /// Throws DomainError unless all three scales are finite and positive.
  void validate() const;
};

/// hbar = epsilon = c = 1.
Constants natural_units();

/// Parses "key = value" lines ('#' starts a comment, blank lines ignored).
/// Recognised keys: hbar, epsilon, c; missing keys keep natural-unit
/// defaults. Throws ParseError on unknown keys, duplicates or non-numeric
/// values, DomainError on non-positive results.
Constants constants_from_config(std::string_view text);

}  // namespace pft
