#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pft/errors.hpp"
#include "pft/vec3.hpp"

namespace pft {

using Complex = std::complex<double>;

/// Uniform periodic box in 1 to 3 dimensions with the same point count and
/// edge length on every axis. Coordinates are centered:
/// x_j = -L/2 + j*h with h = L/N, so the periodic wrap sits at index 0.
struct GridSpec {
  int dim = 1;
  int points = 64;     ///< per axis; power of two, at least 8
  double length = 16;  ///< per axis

  /// Throws DomainError when any field is outside the contract above.
  void validate() const;

  double spacing() const { return length / points; }
  std::size_t site_count() const;
  double cell_volume() const;
  double coordinate(int index) const { return -0.5 * length + index * spacing(); }

  std::array<int, 3> unflatten(std::size_t flat) const;
  std::size_t flatten(const std::array<int, 3>& index) const;
  /// Coordinates of a flattened site; axes beyond dim read 0.
  Vec3 site_position(std::size_t flat) const;

  bool operator==(const GridSpec&) const = default;
};

/// Complex amplitudes sampled on a GridSpec, stored row-major. Value type:
/// every operation returns a fresh state, amplitudes are never mutated in
/// place. time_tag records the instant the samples refer to.
class WaveFunction {
 public:
  WaveFunction(GridSpec grid, std::vector<Complex> values, double time_tag = 0.0);

  static WaveFunction zeros(const GridSpec& grid, double time_tag = 0.0);

  const GridSpec& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  double time_tag() const { return time_tag_; }

  /// sqrt of sum |psi|^2 h^dim (compensated summation).
  double norm() const;
  /// Unit-norm copy; throws DomainError when the norm is zero or not finite.
  WaveFunction normalized() const;
  WaveFunction with_time_tag(double t) const;

  double max_abs() const;
  /// Largest |psi| over the outermost layer of sites on any axis.
  double max_boundary_abs() const;

 private:
  GridSpec grid_;
  std::vector<Complex> values_;
  double time_tag_;
};

// Linear combinations keep the left operand's time tag and throw
// GridMismatch when the grids differ.
WaveFunction operator+(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator-(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator*(Complex s, const WaveFunction& a);

/// Discrete L2 pairing sum conj(a) b h^dim. Throws GridMismatch when the
/// grids differ; differing time tags are allowed.
Complex inner_product(const WaveFunction& a, const WaveFunction& b);

double l2_distance(const WaveFunction& a, const WaveFunction& b);
double max_abs_difference(const WaveFunction& a, const WaveFunction& b);

/// Throws EdgeLeakage when the boundary amplitude exceeds the threshold;
/// geometric preconditions elsewhere assume states that pass this.
void require_edge_decay(const WaveFunction& psi, double threshold = 1e-12);

enum class Backend { Spectral, FD2, FD4 };
std::string to_string(Backend backend);

/// Labelled linear map on sampled wavefunctions.
struct Operator {
  std::string label;
  std::function<WaveFunction(const WaveFunction&)> action;
  Backend backend = Backend::Spectral;
  bool hermitian = true;

  WaveFunction operator()(const WaveFunction& psi) const { return action(psi); }
};

/// <psi|op|psi> for a normalized state (no normalization applied here).
Complex expectation(const Operator& op, const WaveFunction& psi);

/// <op^2> - <op>^2, clamped at zero against rounding. For Hermitian
/// operators <op^2> is evaluated as |op psi|^2, one application only.
double variance(const Operator& op, const WaveFunction& psi);

/// Columnar text dump: "# dim N L time" header then "index re im" rows with
/// full double precision. load_wavefunction inverts it bit-exactly and
/// throws ParseError on malformed input.
void dump_wavefunction(std::ostream& out, const WaveFunction& psi);
WaveFunction load_wavefunction(std::istream& in);

}  // namespace pft
