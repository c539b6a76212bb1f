#ifndef CYCLAB_CORONA_HPP
#define CYCLAB_CORONA_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclab/poly.hpp"
#include "cyclab/rat.hpp"
#include "cyclab/spaces.hpp"

namespace cyclab {

/// Grid over the closed disc used for infima: radii packed toward the
/// boundary crossed with a uniform angular grid, plus one local refinement
/// pass around the grid minimiser.
struct DiscGridSpec {
  int radial = 96;
  int angular = 512;
  int refine_passes = 4;
  int refine_points = 17;  // per axis, around the current minimiser
};

struct GridInfimum {
  double value = 0.0;
  cplx argmin;
  DiscGridSpec grid;
};

/// Corona datum: a pair with 0 < delta <= |f1| + |f2| <= upper on the disc.
struct CoronaInstance {
  Poly f1;
  Poly f2;
  double delta = 0.0;  // grid infimum of |f1| + |f2|
  double upper = 0.0;  // circle supremum of |f1| + |f2|
};

/// Least-squares Bezout solution of f1 g1 + f2 g2 = 1 at a given degree.
struct BezoutSolution {
  Poly g1;
  Poly g2;
  double residual = 0.0;  // ||f1 g1 + f2 g2 - 1|| in the chosen space
  std::pair<double, double> g_norms;      // space norms of (g1, g2)
  std::pair<double, double> g_sup_norms;  // circle sup norms (multiplier lower bounds)
};

struct SweepPoint {
  double delta = 0.0;
  int degree = -1;  // smallest scheduled degree with residual < target; -1 if none
  double residual = 0.0;
  double g1_norm = 0.0;  // sup-circle norms
  double g2_norm = 0.0;
  double g1_space_norm = 0.0;
  double g2_space_norm = 0.0;
};

/// Ordinary least squares of log(norm) against log(1/delta).
struct ExponentFit {
  std::vector<double> deltas;
  std::vector<double> norms;
  double fitted_A = 0.0;
  double fitted_logC = 0.0;
  double fit_residual = 0.0;
  std::vector<SweepPoint> points;
};

/// Grid infimum of |f1| + |f2| over the closed disc.
GridInfimum delta_inf(const Rat& f1, const Rat& f2, const DiscGridSpec& grid = {});

CoronaInstance make_corona_instance(const Poly& f1, const Poly& f2, const DiscGridSpec& grid = {});

/// Minimise ||f1 g1 + f2 g2 - 1||_X over polynomial pairs of degree <= degree.
BezoutSolution bezout_ls(const SpaceSpec& space, const CoronaInstance& inst, int degree);

/// For each instance, the smallest degree reaching residual < residual_target
/// and the resulting norms; exponent fit on the sup-circle norms.
ExponentFit exponent_sweep(const SpaceSpec& space, const std::vector<CoronaInstance>& family,
                           const std::vector<int>& degree_schedule,
                           double residual_target = 1e-8);

struct DeltaLambdaResult {
  double value = 0.0;  // grid infimum of the delta_lambda functional
  double bound = 0.0;  // proved lower bound
  double c_eps = 0.0;  // only set by the outer-function variant
  cplx argmin;
};

/// inf_D |1 - lambda g| + |f| for |g| <= |f|, against min(1/2, 1/(2|lambda|)).
/// Throws domination_error (with witness) when |g| > |f| somewhere on the grid.
DeltaLambdaResult delta_lambda_dominated(const Poly& f, const Poly& g, cplx lambda,
                                         const DiscGridSpec& grid = {});

/// inf_D |lambda - z| + |f(z)| for outer f, against
/// min(c_eps exp(-eps/(1-|lambda|)), |1-|lambda||/2) with c_eps estimated as
/// the grid infimum of |f(z)| exp(eps/(2(1-|z|))).
DeltaLambdaResult delta_lambda_outer(const Poly& f, cplx lambda, double eps,
                                     const DiscGridSpec& grid = {});

struct LogDominanceResult {
  bool holds = true;
  std::optional<cplx> witness;
  std::string reason;
  int skipped_points = 0;  // grid points with |f(z)| >= ||f|| (log nonpositive)
  double f_algebra_norm = 0.0;
};

/// Checks Re g >= 0 and |g(z)| <= (log(||f||_A / |f(z)|))^{-gamma} over the
/// grid, with ||f||_A the Besov algebra norm of space_for_norm.
LogDominanceResult log_dominance_check(const Poly& f, const Poly& g, double gamma,
                                       const SpaceSpec& space_for_norm,
                                       const DiscGridSpec& grid = {});

/// Same check against a precomputed norm value (test hook for synthetic norms).
LogDominanceResult log_dominance_check_with_norm(const Poly& f, const Poly& g, double gamma,
                                                 double f_norm, const DiscGridSpec& grid = {});

}  // namespace cyclab

#endif
