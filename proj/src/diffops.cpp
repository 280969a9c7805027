#include "pft/diffops.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "fft.hpp"

namespace pft {

namespace {

template <class Fn>
void for_each_site(const GridSpec& g, Fn&& fn) {
  const auto b = detail::loop_bounds(g);
  std::size_t flat = 0;
  for (int i0 = 0; i0 < b[0]; ++i0) {
    for (int i1 = 0; i1 < b[1]; ++i1) {
      for (int i2 = 0; i2 < b[2]; ++i2, ++flat) {
        fn(flat, std::array<int, 3>{i0, i1, i2});
      }
    }
  }
}

std::array<std::size_t, 3> strides(const GridSpec& g) {
  const auto b = detail::loop_bounds(g);
  return {static_cast<std::size_t>(b[1]) * static_cast<std::size_t>(b[2]),
          static_cast<std::size_t>(b[2]), 1};
}

void require_axis(const GridSpec& g, int axis) {
  if (axis < 0 || axis >= g.dim) {
    throw DomainError("axis " + std::to_string(axis) + " outside grid dimension " +
                      std::to_string(g.dim));
  }
}

void require_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw DomainError(std::string(what) + " must be finite and positive");
  }
}

// Periodic neighbor access along one axis for the stencil backends.
struct AxisView {
  const std::vector<Complex>& src;
  std::size_t stride;
  int points;

  Complex at(std::size_t flat, int axis_index, int shift) const {
    int j = axis_index + shift;
    if (j < 0) j += points;
    if (j >= points) j -= points;
    const auto off = static_cast<std::ptrdiff_t>(j - axis_index) *
                     static_cast<std::ptrdiff_t>(stride);
    return src[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(flat) + off)];
  }
};

std::vector<Complex> spectral_derivative(std::vector<Complex> spec, const GridSpec& g, int axis) {
  for_each_site(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
    if (detail::is_nyquist(g, idx[axis])) {
      spec[flat] = Complex(0.0, 0.0);
    } else {
      spec[flat] *= Complex(0.0, detail::wavenumber(g, idx[axis]));
    }
  });
  detail::dft_inverse(spec, g);
  return spec;
}

std::vector<Complex> stencil_derivative(const std::vector<Complex>& src, const GridSpec& g,
                                        int axis, Backend backend) {
  const AxisView view{src, strides(g)[axis], g.points};
  const double h = g.spacing();
  std::vector<Complex> out(src.size());
  if (backend == Backend::FD2) {
    const double w = 1.0 / (2.0 * h);
    for_each_site(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
      out[flat] = w * (view.at(flat, idx[axis], 1) - view.at(flat, idx[axis], -1));
    });
  } else {
    const double w = 1.0 / (12.0 * h);
    for_each_site(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
      const int i = idx[axis];
      out[flat] = w * (view.at(flat, i, -2) - 8.0 * view.at(flat, i, -1) +
                       8.0 * view.at(flat, i, 1) - view.at(flat, i, 2));
    });
  }
  return out;
}

std::vector<Complex> stencil_laplacian(const std::vector<Complex>& src, const GridSpec& g,
                                       Backend backend) {
  const auto str = strides(g);
  const double h2 = g.spacing() * g.spacing();
  std::vector<Complex> out(src.size());
  for (int axis = 0; axis < g.dim; ++axis) {
    const AxisView view{src, str[axis], g.points};
    if (backend == Backend::FD2) {
      const double w = 1.0 / h2;
      for_each_site(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
        const int i = idx[axis];
        out[flat] += w * (view.at(flat, i, 1) - 2.0 * src[flat] + view.at(flat, i, -1));
      });
    } else {
      const double w = 1.0 / (12.0 * h2);
      for_each_site(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
        const int i = idx[axis];
        out[flat] += w * (-view.at(flat, i, 2) + 16.0 * view.at(flat, i, 1) - 30.0 * src[flat] +
                          16.0 * view.at(flat, i, -1) - view.at(flat, i, -2));
      });
    }
  }
  return out;
}

void require_known_backend(Backend backend) {
  if (backend != Backend::Spectral && backend != Backend::FD2 && backend != Backend::FD4) {
    throw UnsupportedBackend("unknown derivative backend");
  }
}

}  // namespace

WaveFunction derivative(const WaveFunction& psi, int axis, Backend backend) {
  const GridSpec& g = psi.grid();
  require_axis(g, axis);
  require_known_backend(backend);
  if (backend == Backend::Spectral) {
    std::vector<Complex> spec(psi.values().begin(), psi.values().end());
    detail::dft_forward(spec, g);
    return WaveFunction(g, spectral_derivative(std::move(spec), g, axis), psi.time_tag());
  }
  std::vector<Complex> src(psi.values().begin(), psi.values().end());
  return WaveFunction(g, stencil_derivative(src, g, axis, backend), psi.time_tag());
}

std::vector<WaveFunction> gradient(const WaveFunction& psi, Backend backend) {
  const GridSpec& g = psi.grid();
  require_known_backend(backend);
  std::vector<WaveFunction> out;
  out.reserve(static_cast<std::size_t>(g.dim));
  if (backend == Backend::Spectral) {
    // One forward transform shared by all axes.
    std::vector<Complex> spec(psi.values().begin(), psi.values().end());
    detail::dft_forward(spec, g);
    for (int axis = 0; axis < g.dim; ++axis) {
      out.emplace_back(g, spectral_derivative(spec, g, axis), psi.time_tag());
    }
  } else {
    std::vector<Complex> src(psi.values().begin(), psi.values().end());
    for (int axis = 0; axis < g.dim; ++axis) {
      out.emplace_back(g, stencil_derivative(src, g, axis, backend), psi.time_tag());
    }
  }
  return out;
}

WaveFunction laplacian(const WaveFunction& psi, Backend backend) {
  const GridSpec& g = psi.grid();
  require_known_backend(backend);
  if (backend == Backend::Spectral) {
    std::vector<Complex> spec(psi.values().begin(), psi.values().end());
    detail::dft_forward(spec, g);
    for_each_site(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
      double k2 = 0.0;
      for (int axis = 0; axis < g.dim; ++axis) {
        const double k = detail::wavenumber(g, idx[axis]);
        k2 += k * k;
      }
      spec[flat] *= -k2;
    });
    detail::dft_inverse(spec, g);
    return WaveFunction(g, std::move(spec), psi.time_tag());
  }
  std::vector<Complex> src(psi.values().begin(), psi.values().end());
  return WaveFunction(g, stencil_laplacian(src, g, backend), psi.time_tag());
}

std::vector<WaveFunction> apply_momentum(const WaveFunction& psi, const Constants& ct,
                                         Backend backend) {
  auto grad = gradient(psi, backend);
  std::vector<WaveFunction> out;
  out.reserve(grad.size());
  for (auto& comp : grad) {
    out.push_back(Complex(0.0, -ct.hbar) * comp);
  }
  return out;
}

std::vector<WaveFunction> apply_force(const WaveFunction& psi, const Constants& ct,
                                      Backend backend) {
  auto grad = gradient(psi, backend);
  std::vector<WaveFunction> out;
  out.reserve(grad.size());
  for (auto& comp : grad) {
    out.push_back(Complex(0.0, -ct.epsilon) * comp);
  }
  return out;
}

WaveFunction apply_hamiltonian_free(const WaveFunction& psi, double mass, const Constants& ct,
                                    Backend backend) {
  require_positive(mass, "mass");
  const double factor = -(ct.hbar * ct.hbar) / (2.0 * mass);
  return Complex(factor, 0.0) * laplacian(psi, backend);
}

WaveFunction apply_power_free(const WaveFunction& psi, double mass, const Constants& ct,
                              Backend backend) {
  require_positive(mass, "mass");
  const double factor = -(ct.hbar * ct.epsilon) / (2.0 * mass);
  return Complex(factor, 0.0) * laplacian(psi, backend);
}

namespace {

// Shared core of the two r x grad operators: out_a = -i scale (r x grad)_a.
std::vector<WaveFunction> rotor_apply(const WaveFunction& psi, double scale) {
  const GridSpec& g = psi.grid();
  if (g.dim != 3) {
    throw DomainError("r x grad operators require a 3d grid");
  }
  require_edge_decay(psi, 1e-12);
  const auto grad = gradient(psi, Backend::Spectral);
  std::vector<std::vector<Complex>> comp(3, std::vector<Complex>(psi.size()));
  const Complex factor(0.0, -scale);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const Vec3 r = g.site_position(i);
    comp[0][i] = factor * (r[1] * grad[2][i] - r[2] * grad[1][i]);
    comp[1][i] = factor * (r[2] * grad[0][i] - r[0] * grad[2][i]);
    comp[2][i] = factor * (r[0] * grad[1][i] - r[1] * grad[0][i]);
  }
  std::vector<WaveFunction> out;
  out.reserve(3);
  for (auto& values : comp) {
    out.emplace_back(g, std::move(values), psi.time_tag());
  }
  return out;
}

}  // namespace

std::vector<WaveFunction> apply_angular_momentum_grid(const WaveFunction& psi,
                                                      const Constants& ct) {
  return rotor_apply(psi, ct.hbar);
}

std::vector<WaveFunction> apply_torque_grid(const WaveFunction& psi, const Constants& ct) {
  return rotor_apply(psi, ct.epsilon);
}

namespace {

const char* axis_suffix(int axis) {
  switch (axis) {
    case 0:
      return "x";
    case 1:
      return "y";
    default:
      return "z";
  }
}

}  // namespace

Operator position_op(int axis) {
  if (axis < 0 || axis > 2) {
    throw DomainError("position axis must be 0, 1 or 2");
  }
  return Operator{
      .label = std::string("x_") + axis_suffix(axis),
      .action =
          [axis](const WaveFunction& psi) {
            require_axis(psi.grid(), axis);
            std::vector<Complex> out(psi.size());
            for (std::size_t i = 0; i < psi.size(); ++i) {
              out[i] = psi.grid().site_position(i)[axis] * psi[i];
            }
            return WaveFunction(psi.grid(), std::move(out), psi.time_tag());
          },
      .backend = Backend::Spectral,
      .hermitian = true,
  };
}

Operator momentum_op(int axis, const Constants& ct, Backend backend) {
  ct.validate();
  return Operator{
      .label = std::string("p_") + axis_suffix(axis),
      .action =
          [axis, ct, backend](const WaveFunction& psi) {
            return Complex(0.0, -ct.hbar) * derivative(psi, axis, backend);
          },
      .backend = backend,
      .hermitian = true,
  };
}

Operator force_op(int axis, const Constants& ct, Backend backend) {
  ct.validate();
  return Operator{
      .label = std::string("F_") + axis_suffix(axis),
      .action =
          [axis, ct, backend](const WaveFunction& psi) {
            return Complex(0.0, -ct.epsilon) * derivative(psi, axis, backend);
          },
      .backend = backend,
      .hermitian = true,
  };
}

Operator hamiltonian_free_op(double mass, const Constants& ct, Backend backend) {
  ct.validate();
  require_positive(mass, "mass");
  return Operator{
      .label = "H_free",
      .action =
          [mass, ct, backend](const WaveFunction& psi) {
            return apply_hamiltonian_free(psi, mass, ct, backend);
          },
      .backend = backend,
      .hermitian = true,
  };
}

Operator power_free_op(double mass, const Constants& ct, Backend backend) {
  ct.validate();
  require_positive(mass, "mass");
  return Operator{
      .label = "P_free",
      .action =
          [mass, ct, backend](const WaveFunction& psi) {
            return apply_power_free(psi, mass, ct, backend);
          },
      .backend = backend,
      .hermitian = true,
  };
}

Operator ho_hamiltonian_op(double mass, double omega, const Constants& ct, Backend backend) {
  ct.validate();
  require_positive(mass, "mass");
  require_positive(omega, "omega");
  return Operator{
      .label = "H_ho",
      .action =
          [mass, omega, ct, backend](const WaveFunction& psi) {
            WaveFunction kinetic = apply_hamiltonian_free(psi, mass, ct, backend);
            const double half_m_w2 = 0.5 * mass * omega * omega;
            std::vector<Complex> out(psi.size());
            for (std::size_t i = 0; i < psi.size(); ++i) {
              const Vec3 r = psi.grid().site_position(i);
              double r2 = 0.0;
              for (int a = 0; a < psi.grid().dim; ++a) {
                r2 += r[a] * r[a];
              }
              out[i] = kinetic[i] + half_m_w2 * r2 * psi[i];
            }
            return WaveFunction(psi.grid(), std::move(out), psi.time_tag());
          },
      .backend = backend,
      .hermitian = true,
  };
}

Operator scaled_op(Complex factor, std::string label, Operator inner) {
  const bool hermitian = inner.hermitian && factor.imag() == 0.0;
  const Backend backend = inner.backend;
  return Operator{
      .label = std::move(label),
      .action =
          [factor, op = std::move(inner)](const WaveFunction& psi) { return factor * op(psi); },
      .backend = backend,
      .hermitian = hermitian,
  };
}

Vec3 commensurate_wavevector(const GridSpec& grid, const std::array<int, 3>& modes) {
  grid.validate();
  Vec3 k{0.0, 0.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    if (a >= grid.dim) {
      if (modes[a] != 0) {
        throw DomainError("mode number on axis beyond grid dimension");
      }
      continue;
    }
    if (std::abs(modes[a]) > grid.points / 2 - 1) {
      throw IncommensurateWavevector("mode number " + std::to_string(modes[a]) +
                                     " outside the resolved band of N = " +
                                     std::to_string(grid.points));
    }
    k[a] = 2.0 * std::numbers::pi * static_cast<double>(modes[a]) / grid.length;
  }
  return k;
}

namespace {

WaveFunction plane_wave_impl(const GridSpec& grid, const Vec3& k, double omega, double time) {
  double volume = 1.0;
  for (int a = 0; a < grid.dim; ++a) {
    volume *= grid.length;
  }
  const double amp = 1.0 / std::sqrt(volume);
  std::vector<Complex> values(grid.site_count());
  for_each_site(grid, [&](std::size_t flat, const std::array<int, 3>& idx) {
    double phase = -omega * time;
    for (int a = 0; a < grid.dim; ++a) {
      phase += k[a] * grid.coordinate(idx[a]);
    }
    values[flat] = std::polar(amp, phase);
  });
  return WaveFunction(grid, std::move(values), time);
}

}  // namespace

WaveFunction plane_wave(const GridSpec& grid, const std::array<int, 3>& modes) {
  const Vec3 k = commensurate_wavevector(grid, modes);
  return plane_wave_impl(grid, k, 0.0, 0.0);
}

WaveFunction plane_wave(const GridSpec& grid, const std::array<int, 3>& modes, double time,
                        double mass, const Constants& ct) {
  require_positive(mass, "mass");
  const Vec3 k = commensurate_wavevector(grid, modes);
  const double omega = ct.hbar * dot(k, k) / (2.0 * mass);
  return plane_wave_impl(grid, k, omega, time);
}

WaveFunction plane_wave_k(const GridSpec& grid, const Vec3& wavevector) {
  grid.validate();
  std::array<int, 3> modes{0, 0, 0};
  for (int a = 0; a < 3; ++a) {
    const double exact = wavevector[a] * grid.length / (2.0 * std::numbers::pi);
    const double rounded = std::round(exact);
    if (std::abs(exact - rounded) > 1e-9) {
      throw IncommensurateWavevector("wavevector component " + std::to_string(wavevector[a]) +
                                     " does not sit on the 2 pi / L lattice");
    }
    modes[a] = static_cast<int>(rounded);
  }
  return plane_wave(grid, modes);
}

WaveFunction ho_eigenstate(int n, double omega, double mass, const GridSpec& grid,
                           const Constants& ct) {
  grid.validate();
  ct.validate();
  if (grid.dim != 1) {
    throw DomainError("oscillator eigenstates are built on 1d grids");
  }
  if (n < 0 || n > 20) {
    throw DomainError("oscillator level must satisfy 0 <= n <= 20");
  }
  require_positive(omega, "omega");
  require_positive(mass, "mass");

  const double alpha = std::sqrt(mass * omega / ct.hbar);  // inverse oscillator length
  const double quartic_root = std::sqrt(alpha) / std::pow(std::numbers::pi, 0.25);
  std::vector<Complex> values(grid.site_count());
  for (int j = 0; j < grid.points; ++j) {
    const double xi = alpha * grid.coordinate(j);
    // Normalized recurrence u_{k+1} = sqrt(2/(k+1)) xi u_k - sqrt(k/(k+1)) u_{k-1};
    // stable because the functions themselves stay O(1).
    double prev = 0.0;
    double cur = std::exp(-0.5 * xi * xi);
    for (int k = 0; k < n; ++k) {
      const double next =
          std::sqrt(2.0 / (k + 1)) * xi * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    values[static_cast<std::size_t>(j)] = quartic_root * cur;
  }

  WaveFunction psi = WaveFunction(grid, std::move(values), 0.0).normalized();
  require_edge_decay(psi, 1e-12);
  return psi;
}

WaveFunction gaussian_packet(const Vec3& center, const Vec3& carrier, double sigma,
                             const GridSpec& grid) {
  grid.validate();
  require_positive(sigma, "sigma");
  const double h = grid.spacing();
  if (sigma < 4.0 * h) {
    throw EdgeLeakage("sigma must be at least 4 grid spacings for a resolved packet");
  }
  for (int a = 0; a < grid.dim; ++a) {
    if (0.5 * grid.length - std::abs(center[a]) < 8.0 * sigma) {
      throw EdgeLeakage("packet center must keep 8 sigma clearance from every box edge");
    }
  }

  const double inv_four_sigma2 = 1.0 / (4.0 * sigma * sigma);
  std::vector<Complex> values(grid.site_count());
  for_each_site(grid, [&](std::size_t flat, const std::array<int, 3>& idx) {
    double log_amp = 0.0;
    double phase = 0.0;
    for (int a = 0; a < grid.dim; ++a) {
      const double q = grid.coordinate(idx[a]) - center[a];
      log_amp -= q * q * inv_four_sigma2;
      phase += carrier[a] * q;
    }
    values[flat] = std::polar(std::exp(log_amp), phase);
  });
  return WaveFunction(grid, std::move(values), 0.0).normalized();
}

WaveFunction evolve_free(const WaveFunction& psi, double dt, double mass, const Constants& ct) {
  require_positive(mass, "mass");
  ct.validate();
  const GridSpec& g = psi.grid();
  std::vector<Complex> spec(psi.values().begin(), psi.values().end());
  detail::dft_forward(spec, g);
  const double rate = ct.hbar / (2.0 * mass);
  for_each_site(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
    double k2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double k = detail::wavenumber(g, idx[a]);
      k2 += k * k;
    }
    spec[flat] *= std::polar(1.0, -rate * k2 * dt);
  });
  detail::dft_inverse(spec, g);
  return WaveFunction(g, std::move(spec), psi.time_tag() + dt);
}

WaveFunction random_band_limited_state(const GridSpec& grid, int max_mode, SeededRng& rng) {
  grid.validate();
  if (max_mode < 0 || max_mode > grid.points / 2 - 1) {
    throw DomainError("max_mode must satisfy 0 <= max_mode <= N/2 - 1");
  }
  std::vector<Complex> spec(grid.site_count(), Complex(0.0, 0.0));
  for_each_site(grid, [&](std::size_t flat, const std::array<int, 3>& idx) {
    bool inside = true;
    for (int a = 0; a < grid.dim; ++a) {
      const int n = idx[a] * 2 < grid.points ? idx[a] : idx[a] - grid.points;
      inside = inside && std::abs(n) <= max_mode;
    }
    if (inside) {
      spec[flat] = rng.complex_in_square();
    }
  });
  detail::dft_inverse(spec, grid);
  return WaveFunction(grid, std::move(spec), 0.0).normalized();
}

EigenCheck eigen_check_applied(const WaveFunction& applied, const WaveFunction& psi) {
  const double norm2 = inner_product(psi, psi).real();
  if (!(norm2 > 0.0)) {
    throw DomainError("eigen check requires a nonzero state");
  }
  const Complex rayleigh = inner_product(psi, applied) / norm2;
  double residual = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    residual = std::max(residual, std::abs(applied[i] - rayleigh * psi[i]));
  }
  return EigenCheck{rayleigh, residual};
}

EigenCheck eigen_check(const Operator& op, const WaveFunction& psi) {
  return eigen_check_applied(op(psi), psi);
}

}  // namespace pft
