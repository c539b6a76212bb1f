#include "cyclab/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace cyclab {

namespace {

// Golub-Welsch for the Jacobi weight (1-x)^a (1+x)^b on [-1, 1]: eigenvalues
// of the symmetric tridiagonal recurrence matrix are the nodes, mu0 times the
// squared first eigenvector components the weights.
RadialRule jacobi_rule(int n, double a, double b) {
  if (n <= 0) throw std::invalid_argument("quadrature: node count must be positive");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double diag;
    if (k == 0) {
      diag = (b - a) / (a + b + 2.0);
    } else {
      const double s = 2.0 * k + a + b;
      diag = (b * b - a * a) / (s * (s + 2.0));
    }
    j(k, k) = diag;
    if (k >= 1) {
      const double s = 2.0 * k + a + b;
      const double beta =
          4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
      const double off = std::sqrt(beta);
      j(k, k - 1) = off;
      j(k - 1, k) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(j);
  if (solver.info() != Eigen::Success) throw std::runtime_error("quadrature: eigen solve failed");

  const double mu0 = std::pow(2.0, a + b + 1.0) *
                     std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  RadialRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    rule.nodes[static_cast<size_t>(k)] = solver.eigenvalues()(k);
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[static_cast<size_t>(k)] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

RadialRule gauss_jacobi_01(int n, double alpha) {
  if (alpha <= -1.0) throw std::invalid_argument("quadrature: alpha must exceed -1");
  RadialRule base = jacobi_rule(n, alpha, 0.0);
  // u = (x+1)/2 maps [-1,1] to [0,1]; (1-x)/2 = 1-u contributes 2^{-alpha},
  // dx/2 another 1/2.
  const double scale = std::pow(2.0, -alpha - 1.0);
  for (size_t k = 0; k < base.nodes.size(); ++k) {
    base.nodes[k] = 0.5 * (base.nodes[k] + 1.0);
    base.weights[k] *= scale;
  }
  return base;
}

RadialRule gauss_legendre_01(int n) { return gauss_jacobi_01(n, 0.0); }

RadialRule gauss_legendre_ab(int n, double a, double b) {
  RadialRule base = gauss_legendre_01(n);
  const double len = b - a;
  for (size_t k = 0; k < base.nodes.size(); ++k) {
    base.nodes[k] = a + len * base.nodes[k];
    base.weights[k] *= len;
  }
  return base;
}

}  // namespace cyclab
