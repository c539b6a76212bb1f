#ifndef CYCLAB_GROWTH_HPP
#define CYCLAB_GROWTH_HPP

#include <string>
#include <vector>

#include "cyclab/mate.hpp"
#include "cyclab/poly.hpp"
#include "cyclab/spaces.hpp"

namespace cyclab {

/// Monomial growth data in a designated norm, with the matching upper bound.
/// `values` holds ||chi_n||; `compared` and `bounds` live on the scale the
/// bound is stated on (norm^p for Besov, partial c-sums for H(b), local
/// Dirichlet integrals for D(mu)), and bound_margin = min(bounds - compared).
struct GrowthReport {
  std::string designation;
  std::vector<int> indices;
  std::vector<double> values;
  std::vector<double> compared;
  std::vector<double> bounds;
  /// Bound translated to the norm scale of `values`, aligned with `indices`
  /// (for CSV export alongside the values).
  std::vector<double> bound_curve;
  double fitted_exponent = 0.0;  // log-log slope of values against n
  double bound_margin = 0.0;
};

/// ||chi_n||_A in the Besov algebra norm (exact Beta integrals) against the
/// bound ||chi_n||_A^p <= 1 + n^p/(alpha+1).
GrowthReport monomial_growth_besov_algebra(double p, double alpha, int n_max);

/// ||chi_n||_{H(b)} = sqrt(1 + sum_{j<=n} |c_j|^2) against C n^{2N+1} on the
/// partial sums, with C fitted on n <= fit_cutoff and verified beyond.
GrowthReport monomial_growth_hb(const RationalMate& mate, int n_max, int fit_cutoff = 50);

/// Fixed witness set for the D(mu) multiplier surrogate (versioned so the
/// "<= C n" fit is reproducible).
std::vector<Poly> dmu_default_witnesses();

/// Multiplier surrogate max_{f in F} ||chi_n f|| / ||f|| in D(mu), with the
/// pointwise inequality D_z(chi_n f) <= 2 n^2 ||f||_2^2 + 2 D_z(f) checked at
/// every atom for every witness.
GrowthReport monomial_growth_dmu_surrogate(const MeasureAtoms& atoms, int n_max,
                                           const std::vector<Poly>& witnesses = dmu_default_witnesses());

struct MultiplierCheck {
  double op_norm_lower = 0.0;  // largest generalized-eigenvalue ratio over deg <= n_max
  double sup_norm = 0.0;
  double space_norm = 0.0;
};

/// Certified lower bound for the multiplier norm of phi from the finite
/// sections ||phi q|| / ||q||, deg q <= n_max, plus the sup and space norms.
MultiplierCheck multiplier_inequality_check(const SpaceSpec& space, const Poly& phi, int n_max);

struct ResolventCheck {
  double series_value = 0.0;  // sum c_n / |lambda|^{n+1}, tail below 1e-12
  double paper_bound = 0.0;   // C p! |lambda|^{p+1} / (|lambda|-1)^{p+1}
  double fitted_C = 0.0;      // max c_n / n^p (domination constant)
};

/// Geometric-series resolvent bound: the sequence must be dominated by
/// C n^p; the series is extended by that model past the provided entries.
/// Throws for |lambda| <= 1 + 1e-6.
ResolventCheck resolvent_bound_check(const std::vector<double>& c_seq, int p, cplx lambda);

struct PowerSumCheck {
  double lhs = 0.0;  // sum n^p x^n, tail below 1e-14
  double rhs = 0.0;  // p! / (1-x)^{p+1}
};

PowerSumCheck power_sum_inequality(int p, double x);

}  // namespace cyclab

#endif
