#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace pft {

/// Deterministic uniform source. std::uniform_real_distribution is
/// implementation-defined, so the engine output is mapped to doubles by a
/// fixed rule; identical seeds give identical streams on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const double u = uniform01();
    const int span = hi - lo + 1;
    int v = lo + static_cast<int>(u * span);
    return v > hi ? hi : v;
  }

  /// Complex with both parts uniform in [-1, 1].
  std::complex<double> complex_in_square() {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pft
