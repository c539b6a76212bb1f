#ifndef CYCLAB_QUADRATURE_HPP
#define CYCLAB_QUADRATURE_HPP

#include <vector>

namespace cyclab {

/// Disc quadrature: Gauss rule in the radial variable u = r^2 (absorbing the
/// (1-u)^alpha weight) crossed with a uniform angular grid.
struct QuadratureSpec {
  int radial_nodes = 128;
  int angular_nodes = 256;
};

struct RadialRule {
  std::vector<double> nodes;    // u in (0, 1)
  std::vector<double> weights;  // sum integrates (1-u)^alpha exactly against polys
};

/// Nodes and weights for int_0^1 h(u) du (alpha = 0 Jacobi case).
RadialRule gauss_legendre_01(int n);

/// Nodes and weights for int_0^1 h(u) (1-u)^alpha du, alpha > -1, via
/// Golub-Welsch on the Jacobi(alpha, 0) recurrence. Exact for polynomial h of
/// degree <= 2n-1.
RadialRule gauss_jacobi_01(int n, double alpha);

/// Gauss rule on an arbitrary interval [a, b] without weight.
RadialRule gauss_legendre_ab(int n, double a, double b);

}  // namespace cyclab

#endif
