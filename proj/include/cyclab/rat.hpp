#ifndef CYCLAB_RAT_HPP
#define CYCLAB_RAT_HPP

#include <vector>

#include "cyclab/poly.hpp"

namespace cyclab {

/// Rational function num/den. The denominator is never the zero polynomial.
struct Rat {
  Poly num;
  Poly den = Poly::one();

  static Rat from_poly(const Poly& p) { return Rat{p, Poly::one()}; }

  /// Evaluate num(z)/den(z); throws pole_error when den(z) is numerically zero.
  cplx operator()(cplx z) const;

  /// (num' den - num den') / den^2, without cancellation of common factors.
  Rat derivative() const;

  bool is_zero() const { return num.is_zero(); }
};

/// True when den has no roots in the closed unit disc (margin 1e-9), so the
/// function is holomorphic on the closed disc.
bool holomorphic_on_closed_disc(const Rat& r);

/// Taylor coefficients of num/den at 0 (den(0) != 0 required).
std::vector<cplx> taylor(const Rat& r, int length);

/// Taylor coefficients c_j of b/a at 0. Requires a(0) != 0 (and b finite at 0).
std::vector<cplx> series_div(const Rat& b, const Rat& a, int length);

/// Maximum modulus over a uniform grid of grid_size points on the circle of
/// radius r. Throws pole_error when a denominator nearly vanishes on a node.
double sup_circle(const Poly& f, int grid_size = 4096, double r = 1.0);
double sup_circle(const Rat& f, int grid_size = 4096, double r = 1.0);

}  // namespace cyclab

#endif
