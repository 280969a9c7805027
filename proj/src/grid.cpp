#include "pft/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "kahan.hpp"

namespace pft {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void GridSpec::validate() const {
  if (dim < 1 || dim > 3) {
    throw DomainError("grid dim must be 1, 2 or 3");
  }
  if (points < 8 || !is_power_of_two(points)) {
    throw DomainError("grid points per axis must be a power of two >= 8");
  }
  if (!(std::isfinite(length) && length > 0.0)) {
    throw DomainError("grid length must be finite and positive");
  }
}

std::size_t GridSpec::site_count() const {
  std::size_t n = 1;
  for (int a = 0; a < dim; ++a) {
    n *= static_cast<std::size_t>(points);
  }
  return n;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) {
    v *= spacing();
  }
  return v;
}

std::array<int, 3> GridSpec::unflatten(std::size_t flat) const {
  std::array<int, 3> idx{0, 0, 0};
  const auto n = static_cast<std::size_t>(points);
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % n);
    flat /= n;
  }
  return idx;
}

std::size_t GridSpec::flatten(const std::array<int, 3>& index) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim; ++a) {
    flat = flat * static_cast<std::size_t>(points) + static_cast<std::size_t>(index[a]);
  }
  return flat;
}

Vec3 GridSpec::site_position(std::size_t flat) const {
  const auto idx = unflatten(flat);
  Vec3 r{0.0, 0.0, 0.0};
  for (int a = 0; a < dim; ++a) {
    r[a] = coordinate(idx[a]);
  }
  return r;
}

WaveFunction::WaveFunction(GridSpec grid, std::vector<Complex> values, double time_tag)
    : grid_(grid), values_(std::move(values)), time_tag_(time_tag) {
  grid_.validate();
  if (values_.size() != grid_.site_count()) {
    throw DomainError("value count does not match grid site count");
  }
}

WaveFunction WaveFunction::zeros(const GridSpec& grid, double time_tag) {
  grid.validate();
  return WaveFunction(grid, std::vector<Complex>(grid.site_count()), time_tag);
}

double WaveFunction::norm() const {
  detail::KahanSum acc;
  for (const auto& v : values_) {
    acc.add(std::norm(v));
  }
  return std::sqrt(acc.value() * grid_.cell_volume());
}

WaveFunction WaveFunction::normalized() const {
  const double n = norm();
  if (!(std::isfinite(n) && n > 0.0)) {
    throw DomainError("cannot normalize a state with zero or non-finite norm");
  }
  const double s = 1.0 / n;
  std::vector<Complex> scaled(values_.size());
  std::transform(values_.begin(), values_.end(), scaled.begin(),
                 [s](const Complex& v) { return s * v; });
  return WaveFunction(grid_, std::move(scaled), time_tag_);
}

WaveFunction WaveFunction::with_time_tag(double t) const {
  return WaveFunction(grid_, values_, t);
}

double WaveFunction::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double WaveFunction::max_boundary_abs() const {
  const int last = grid_.points - 1;
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto idx = grid_.unflatten(i);
    bool boundary = false;
    for (int a = 0; a < grid_.dim; ++a) {
      boundary = boundary || idx[a] == 0 || idx[a] == last;
    }
    if (boundary) {
      m = std::max(m, std::abs(values_[i]));
    }
  }
  return m;
}

namespace {

void require_same_grid(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch("operands live on different grids");
  }
}

}  // namespace

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return WaveFunction(a.grid(), std::move(out), a.time_tag());
}

WaveFunction operator-(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return WaveFunction(a.grid(), std::move(out), a.time_tag());
}

WaveFunction operator*(Complex s, const WaveFunction& a) {
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = s * a[i];
  }
  return WaveFunction(a.grid(), std::move(out), a.time_tag());
}

Complex inner_product(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  detail::KahanSum re;
  detail::KahanSum im;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Complex& u = a[i];
    const Complex& v = b[i];
    re.add(u.real() * v.real() + u.imag() * v.imag());
    im.add(u.real() * v.imag() - u.imag() * v.real());
  }
  const double vol = a.grid().cell_volume();
  return {re.value() * vol, im.value() * vol};
}

double l2_distance(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  detail::KahanSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc.add(std::norm(a[i] - b[i]));
  }
  return std::sqrt(acc.value() * a.grid().cell_volume());
}

double max_abs_difference(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

void require_edge_decay(const WaveFunction& psi, double threshold) {
  const double edge = psi.max_boundary_abs();
  if (!(edge <= threshold)) {
    throw EdgeLeakage("boundary amplitude " + format_double(edge) + " exceeds " +
                      format_double(threshold));
  }
}

std::string to_string(Backend backend) {
  switch (backend) {
    case Backend::Spectral:
      return "spectral";
    case Backend::FD2:
      return "fd2";
    case Backend::FD4:
      return "fd4";
  }
  throw UnsupportedBackend("unknown backend value");
}

Complex expectation(const Operator& op, const WaveFunction& psi) {
  return inner_product(psi, op(psi));
}

double variance(const Operator& op, const WaveFunction& psi) {
  const WaveFunction applied = op(psi);
  const Complex mean = inner_product(psi, applied);
  double second = 0.0;
  if (op.hermitian) {
    second = inner_product(applied, applied).real();
  } else {
    second = inner_product(psi, op(applied)).real();
  }
  return std::max(second - std::norm(mean), 0.0);
}

void dump_wavefunction(std::ostream& out, const WaveFunction& psi) {
  const GridSpec& g = psi.grid();
  out << "# " << g.dim << ' ' << g.points << ' ' << format_double(g.length) << ' '
      << format_double(psi.time_tag()) << '\n';
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out << i << ' ' << format_double(psi[i].real()) << ' ' << format_double(psi[i].imag())
        << '\n';
  }
}

WaveFunction load_wavefunction(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty wavefunction dump");
  }
  std::istringstream header(line);
  char hash = 0;
  GridSpec g;
  double time_tag = 0.0;
  header >> hash >> g.dim >> g.points >> g.length >> time_tag;
  if (header.fail() || hash != '#') {
    throw ParseError("malformed wavefunction header: '" + line + "'");
  }
  g.validate();

  std::vector<Complex> values(g.site_count());
  std::vector<bool> seen(values.size(), false);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::size_t index = 0;
    double re = 0.0;
    double im = 0.0;
    row >> index >> re >> im;
    if (row.fail() || index >= values.size()) {
      throw ParseError("malformed wavefunction row: '" + line + "'");
    }
    if (seen[index]) {
      throw ParseError("duplicate wavefunction row index");
    }
    seen[index] = true;
    values[index] = {re, im};
    ++rows;
  }
  if (rows != values.size()) {
    throw ParseError("wavefunction dump incomplete");
  }
  return WaveFunction(g, std::move(values), time_tag);
}

}  // namespace pft
