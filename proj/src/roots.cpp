#include "cyclab/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace cyclab {

namespace {

// Parlett-Reinsch style balancing, adapted to a complex matrix: scale
// row/column pairs by powers of two until the off-diagonal 1-norms stop
// improving.
void balance(Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  const double gamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent != 0) {
        const double scaled_col = std::ldexp(col, exponent);
        const double scaled_row = std::ldexp(row, -exponent);
        if (scaled_col + scaled_row < gamma * (col + row)) {
          changed = true;
          const double up = std::ldexp(1.0, exponent);
          const double down = std::ldexp(1.0, -exponent);
          for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            m(i, j) *= down;
            m(j, i) *= up;
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<cplx> companion_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("companion_roots: zero polynomial");
  const int d = p.degree();
  if (d == 0) return {};
  const auto& c = p.coeffs();
  if (d == 1) return {-c[0] / c[1]};
  if (d == 2) {
    // Stable quadratic: q = -(b + sign-matched sqrt(disc)) / 2.
    const cplx a = c[2], b = c[1], c0 = c[0];
    cplx disc = std::sqrt(b * b - 4.0 * a * c0);
    if ((std::conj(b) * disc).real() < 0.0) disc = -disc;
    const cplx q = -0.5 * (b + disc);
    cplx r1 = q / a;
    cplx r2 = (q != cplx(0.0)) ? c0 / q : cplx(0.0);
    return {r1, r2};
  }

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = cplx(1.0);
  for (int i = 0; i < d; ++i) m(i, d - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(d)];
  balance(m);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion_roots: eigenvalue iteration failed");

  std::vector<cplx> roots(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

cplx newton_polish(const Poly& p, cplx z0, int iters) {
  const Poly dp = p.derivative();
  cplx z = z0;
  for (int i = 0; i < iters; ++i) {
    const cplx d = dp(z);
    if (std::abs(d) < 1e-14 * std::max(1.0, p.coeff_l1())) return z;
    const cplx step = p(z) / d;
    z -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
  }
  // Reject wild excursions; the eigenvalue estimate is already decent.
  return std::abs(z - z0) < 0.1 * (1.0 + std::abs(z0)) ? z : z0;
}

}  // namespace cyclab
