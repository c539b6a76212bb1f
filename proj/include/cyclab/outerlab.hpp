#ifndef CYCLAB_OUTERLAB_HPP
#define CYCLAB_OUTERLAB_HPP

#include <functional>
#include <utility>
#include <vector>

#include "cyclab/poly.hpp"
#include "cyclab/rat.hpp"

namespace cyclab {

/// log of a boundary modulus sampled on a uniform dyadic circle grid. Samples
/// live at the midpoint nodes theta_j = 2 pi (j + 1/2) / grid_size so that
/// integrable log singularities (boundary zeros) never hit a node.
struct BoundaryModulus {
  std::vector<double> log_phi;
  int grid_size = 0;

  /// Sample phi(e^{i theta}) > 0 at the midpoint nodes. All log values must be
  /// finite; grid_size must be a power of two.
  static BoundaryModulus from_function(const std::function<double(double)>& phi, int grid_size);
  /// Wrap already-sampled log phi values (midpoint convention assumed).
  static BoundaryModulus from_log_samples(std::vector<double> log_phi);
  /// |f| on the circle for a polynomial f.
  static BoundaryModulus from_poly_modulus(const Poly& f, int grid_size);
  /// CSV rows "theta,phi" on the midpoint grid (a power-of-two count of
  /// uniformly spaced angles; a leading header row is skipped).
  static BoundaryModulus from_csv(const std::string& text);
};

struct OuterEval {
  cplx value;
  bool accuracy_warning = false;  // |z| > 0.999 leaves the documented accuracy domain
};

/// Herglotz-integral reconstruction of the outer function with the given
/// boundary modulus (unimodular constant fixed to 1): trapezoidal quadrature
/// of exp( integral (xi+z)/(xi-z) log phi(xi) dm(xi) ).
OuterEval outer_from_modulus(const BoundaryModulus& m, cplx z);

/// For polynomials, outer means zero-free on the open disc: all roots have
/// modulus >= 1 - 1e-10 (multiple-root clusters are polished before the test).
bool is_outer(const Poly& f);

/// | log|f(0)| - circle average of log|f| |: zero for outer f, used as an
/// independent cross-check of is_outer.
double outer_mean_value_gap(const Poly& f, int grid_size = 4096);

/// Unimodular roots of f with multiplicities: polished roots with
/// | |root| - 1 | <= band, clustered at cluster_tol.
std::vector<std::pair<cplx, int>> boundary_zeros(const Poly& f, double band = 1e-8,
                                                 double cluster_tol = 1e-6);

/// Samples of (1 - r) log |f(r zeta)| along the radius toward a boundary zero
/// zeta of f. Default radii are 1 - 2^{-k}, k = 1..20.
std::vector<double> shapiro_shields_decay(const Poly& f, cplx zeta,
                                          std::vector<double> radii = {});

struct E0Report {
  cplx zeta;
  bool member = false;  // |b(zeta)| = 1 within 1e-9
  double modulus_at_zeta = 0.0;
  double derivative_modulus = 0.0;
};

/// Angular-derivative set membership for rational b holomorphic on the closed
/// disc: reduces to |b(zeta)| = 1 since b' is automatically continuous there.
E0Report e0_membership(const Rat& b, cplx zeta);

}  // namespace cyclab

#endif
