#ifndef CYCLAB_SPACES_HPP
#define CYCLAB_SPACES_HPP

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "cyclab/mate.hpp"
#include "cyclab/poly.hpp"
#include "cyclab/quadrature.hpp"

namespace cyclab {

/// Finite atomic measure on the closed unit disc.
struct MeasureAtoms {
  struct Atom {
    cplx location;  // |location| <= 1
    double weight;  // > 0
  };
  std::vector<Atom> atoms;

  double total_mass() const;
  /// Atoms are classified as circle atoms when | |location| - 1 | <= 1e-12.
  static bool on_circle(cplx location) { return std::abs(std::abs(location) - 1.0) <= 1e-12; }
};

struct HardySpec {};

struct WeightedDirichletSpec {
  double alpha = 0.0;  // > -1
};

struct BesovDirichletSpec {
  double p = 2.0;      // > 1
  double alpha = 0.0;  // > -1
};

struct DeBrangesRovnyakSpec {
  RationalMate mate;
};

struct HarmonicDirichletSpec {
  MeasureAtoms atoms;
};

using SpaceKind = std::variant<HardySpec, WeightedDirichletSpec, BesovDirichletSpec,
                               DeBrangesRovnyakSpec, HarmonicDirichletSpec>;

/// One of the five function spaces together with its quadrature budget.
struct SpaceSpec {
  SpaceKind kind;
  QuadratureSpec quadrature{};

  static SpaceSpec hardy();
  static SpaceSpec weighted_dirichlet(double alpha);
  static SpaceSpec besov_dirichlet(double p, double alpha);
  static SpaceSpec de_branges_rovnyak(RationalMate mate);
  static SpaceSpec harmonic_dirichlet(MeasureAtoms atoms);

  /// Hardy, weighted Dirichlet, Besov with p = 2, H(b) and D(mu) carry inner
  /// products; Besov with p != 2 only norms.
  bool is_inner_product() const;

  /// Cyclicity experiments assume alpha+1 <= p <= alpha+2 for Besov spaces;
  /// other parameters are allowed for norm exploration but flagged.
  bool besov_outside_standard_range() const;

  std::string name() const;
};

/// Hermitian positive semidefinite matrix of basis inner products.
struct GramMatrix {
  Eigen::MatrixXcd entries;
  std::string basis_label;

  bool is_hermitian(double tol = 1e-12) const;
  /// Smallest eigenvalue >= -tol_scale * largest.
  bool is_psd(double tol_scale = 1e-9) const;
};

/// Inner product <f, g>, linear in f. Throws non_hilbert_error for Besov
/// spaces with p != 2.
cplx inner(const SpaceSpec& space, const Poly& f, const Poly& g);

/// Gram matrix of the monomials chi_0..chi_{n_max}.
GramMatrix monomial_gram(const SpaceSpec& space, int n_max);

enum class NormVariant {
  space,    // the defining norm of the space
  algebra,  // Besov algebra norm: sup-norm^p + seminorm^p, no (1+alpha) factor
};

struct NormResult {
  double value = 0.0;
  bool quadrature_warning = false;  // doubling the nodes moved the result > 1e-6 relative
  double quadrature_shift = 0.0;
};

double norm(const SpaceSpec& space, const Poly& f, NormVariant variant = NormVariant::space);
NormResult norm_checked(const SpaceSpec& space, const Poly& f, NormVariant variant = NormVariant::space);

/// Reproducing kernel at (lambda, z), both in the open disc. Available for
/// Hardy (b = 0) and H(b).
cplx kernel(const SpaceSpec& space, cplx lambda, cplx z);

/// Superharmonic potential of the atomic measure at z in the open disc.
/// Throws singularity_error when z hits an interior atom.
double u_mu(const MeasureAtoms& atoms, cplx z);

/// Local Dirichlet integral D_z(g): squared l2 norm of the difference
/// quotient (g - g(z))/(. - z); exact via synthetic division.
double local_dirichlet(const Poly& g, cplx z);

/// Polarised local Dirichlet integral D_z(f, g), linear in f.
cplx local_dirichlet_pairing(const Poly& f, const Poly& g, cplx z);

struct EnergyIdentityResult {
  double lhs = 0.0;  // disc integral of |g'|^2 U_mu dA
  double rhs = 0.0;  // sum of weights times local Dirichlet integrals
  double relative_gap = 0.0;
  bool quadrature_warning = false;
};

/// Both sides of the energy identity for an atomic measure: the left side by
/// radial quadrature with the angular direction integrated exactly against
/// the kernel harmonics, the right side exactly via synth_div.
EnergyIdentityResult energy_identity_check(const MeasureAtoms& atoms, const Poly& g,
                                           const QuadratureSpec& quad = {});

/// int_D |fprime|^p (1 - |z|^2)^alpha dA with normalized area measure.
double besov_seminorm_integral(const Poly& fprime, double p, double alpha,
                               const QuadratureSpec& quad);

}  // namespace cyclab

#endif
