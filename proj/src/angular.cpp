#include "pft/angular.hpp"

#include <cmath>
#include <complex>

#include "pft/errors.hpp"

namespace pft {

namespace {

using Eigen::MatrixXcd;

double max_abs_entry(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Worst entry over all index pairs of [A_g, B_b] - i unit sum_v levi T_v.
double commutator_residual(const std::array<const MatrixXcd*, 3>& a,
                           const std::array<const MatrixXcd*, 3>& b,
                           const std::array<const MatrixXcd*, 3>& t, double unit) {
  double worst = 0.0;
  for (int g = 0; g < 3; ++g) {
    for (int bb = 0; bb < 3; ++bb) {
      MatrixXcd lhs = (*a[g]) * (*b[bb]) - (*b[bb]) * (*a[g]);
      for (int v = 0; v < 3; ++v) {
        const int sign = levi_civita(g, bb, v);
        if (sign != 0) {
          lhs -= std::complex<double>(0.0, unit * sign) * (*t[v]);
        }
      }
      worst = std::max(worst, max_abs_entry(lhs));
    }
  }
  return worst;
}

}  // namespace

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // Even permutations of (0,1,2).
  if ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) ||
      (a == 2 && b == 0 && c == 1)) {
    return 1;
  }
  return -1;
}

const Eigen::MatrixXcd& Multiplet::angular(int axis) const {
  switch (axis) {
    case 0:
      return lx;
    case 1:
      return ly;
    case 2:
      return lz;
  }
  throw DomainError("axis must be 0, 1 or 2");
}

const Eigen::MatrixXcd& Multiplet::torque(int axis) const {
  switch (axis) {
    case 0:
      return tx;
    case 1:
      return ty;
    case 2:
      return tz;
  }
  throw DomainError("axis must be 0, 1 or 2");
}

Multiplet multiplet(int l, const Constants& ct) {
  ct.validate();
  if (l < 0 || l > 50) {
    throw DomainError("multiplet label must satisfy 0 <= l <= 50");
  }
  const int d = 2 * l + 1;

  // Basis |l, m> with m = row - l. Raising operator:
  // L+ |l,m> = hbar sqrt(l(l+1) - m(m+1)) |l,m+1>.
  MatrixXcd raise = MatrixXcd::Zero(d, d);
  MatrixXcd lz = MatrixXcd::Zero(d, d);
  const double ll = static_cast<double>(l) * (l + 1);
  for (int row = 0; row < d; ++row) {
    const double m = row - l;
    lz(row, row) = ct.hbar * m;
    if (row + 1 < d) {
      raise(row + 1, row) = ct.hbar * std::sqrt(ll - m * (m + 1));
    }
  }
  const MatrixXcd lower = raise.adjoint();

  Multiplet out;
  out.l = l;
  out.hbar = ct.hbar;
  out.epsilon = ct.epsilon;
  out.lx = 0.5 * (raise + lower);
  out.ly = std::complex<double>(0.0, -0.5) * (raise - lower);
  out.lz = lz;
  // Torque components are the eps/hbar image of the angular ones; scaling
  // entrywise keeps that relation exact in floating point.
  const double ratio = ct.epsilon / ct.hbar;
  out.tx = ratio * out.lx;
  out.ty = ratio * out.ly;
  out.tz = ratio * out.lz;
  return out;
}

double torque_algebra_residual(const Multiplet& m) {
  const std::array<const MatrixXcd*, 3> t{&m.tx, &m.ty, &m.tz};
  return commutator_residual(t, t, t, m.epsilon);
}

double mixed_commutator_residual(const Multiplet& m) {
  const std::array<const MatrixXcd*, 3> l{&m.lx, &m.ly, &m.lz};
  const std::array<const MatrixXcd*, 3> t{&m.tx, &m.ty, &m.tz};
  return commutator_residual(l, t, t, m.hbar);
}

double torque_magnitude(int l, const Constants& ct) {
  ct.validate();
  if (l < 0 || l > 50) {
    throw DomainError("multiplet label must satisfy 0 <= l <= 50");
  }
  const double ll = static_cast<double>(l) * (l + 1);
  return ct.epsilon * std::sqrt(ll);
}

double torque_magnitude_from_matrices(const Multiplet& m) {
  const MatrixXcd casimir = m.tx * m.tx + m.ty * m.ty + m.tz * m.tz;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(casimir);
  const double top = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace pft
