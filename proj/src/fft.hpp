#pragma once

#include <vector>

#include "pft/grid.hpp"

namespace pft::detail {

// In-place unnormalized forward DFT over all grid axes.
void dft_forward(std::vector<Complex>& data, const GridSpec& grid);

// In-place inverse DFT including the 1/N^dim factor.
void dft_inverse(std::vector<Complex>& data, const GridSpec& grid);

// Signed wavenumber of bin j along one axis: 2 pi n / L with
// n = j for j < N/2 and n = j - N otherwise (Nyquist maps to -N/2).
double wavenumber(const GridSpec& grid, int bin);

bool is_nyquist(const GridSpec& grid, int bin);

// Loop bounds (b0, b1, b2) such that flat = (i0*b1 + i1)*b2 + i2 walks the
// row-major array; axes beyond dim have bound 1.
std::array<int, 3> loop_bounds(const GridSpec& grid);

}  // namespace pft::detail
