#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>

namespace pft::detail {

namespace {

// FFTW's planner is not thread safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void run(std::vector<Complex>& data, const GridSpec& grid, int sign) {
  int n[3] = {grid.points, grid.points, grid.points};
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = nullptr;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    // FFTW_ESTIMATE picks the plan heuristically and leaves the array
    // untouched during planning, keeping runs deterministic.
    plan = fftw_plan_dft(grid.dim, n, ptr, ptr, sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) {
    throw Error("fftw plan creation failed");
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace

void dft_forward(std::vector<Complex>& data, const GridSpec& grid) {
  run(data, grid, FFTW_FORWARD);
}

void dft_inverse(std::vector<Complex>& data, const GridSpec& grid) {
  run(data, grid, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(grid.site_count());
  for (auto& v : data) {
    v *= scale;
  }
}

double wavenumber(const GridSpec& grid, int bin) {
  const int n = bin < grid.points / 2 ? bin : bin - grid.points;
  return 2.0 * std::numbers::pi * static_cast<double>(n) / grid.length;
}

bool is_nyquist(const GridSpec& grid, int bin) { return bin == grid.points / 2; }

std::array<int, 3> loop_bounds(const GridSpec& grid) {
  return {grid.points, grid.dim > 1 ? grid.points : 1, grid.dim > 2 ? grid.points : 1};
}

}  // namespace pft::detail
