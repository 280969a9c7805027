#pragma once

namespace pft::detail {

// Compensated accumulator; keeps long reductions at a few ulp regardless
// of term count. Relies on strict IEEE evaluation (no fast-math).
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

}  // namespace pft::detail
