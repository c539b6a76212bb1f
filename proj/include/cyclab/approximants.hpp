#ifndef CYCLAB_APPROXIMANTS_HPP
#define CYCLAB_APPROXIMANTS_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cyclab/poly.hpp"
#include "cyclab/spaces.hpp"

namespace cyclab {

/// Optimal polynomial approximant of degree <= degree: the minimiser p of
/// ||p f - 1||_X together with the achieved distance.
struct ApproximantResult {
  int degree = 0;
  Poly coefficients;   // the minimiser p
  double distance = 0.0;  // ||p f - 1||_X
  Poly residual_poly;  // p f - 1
};

struct DecayFit {
  std::string model;  // "c/log(n)", "c/n^beta" or "plateau"
  double c = 0.0;
  double beta = 0.0;
  double residual = 0.0;  // RMS misfit over the fitted tail
};

struct CyclicityReport {
  std::vector<int> degrees;
  std::vector<double> distances;
  DecayFit decay_fit;
  std::string verdict;  // "decaying" or "plateau"
  double plateau_floor = 1e-3;
  double plateau_tolerance = 0.01;  // relative stabilisation over a doubling window
};

struct BpeReport {
  cplx zeta;
  std::vector<int> degrees;
  std::vector<double> values;  // v_n = sup |p(zeta)| over ||p||_X <= 1, deg p <= n
  bool bounded_flag = false;
  double cauchy_threshold = 1e-3;
};

struct DescentParams {
  int max_iters = 5000;
  double grad_tol = 1e-8;
};

/// Solve the normal equations for the minimiser; inner-product spaces only.
ApproximantResult opa(const SpaceSpec& space, const Poly& f, int degree);

/// Convex descent path for Besov-Dirichlet norms with general p > 1 (BFGS on
/// the p-norm objective). With p = 2 it must agree with opa to 1e-6.
ApproximantResult opa_descent(const SpaceSpec& space, const Poly& f, int degree,
                              const DescentParams& params = {});

/// Degrees 0, 1, 2, 4, ..., n_max (n_max and n_max/2 always included).
std::vector<int> default_degree_schedule(int n_max);

CyclicityReport cyclicity_scan(const SpaceSpec& space, const Poly& f, int n_max,
                               std::vector<int> schedule = {});

/// Distance from target to span{z^k f : k <= degree} in the space norm.
double dist_to_span(const SpaceSpec& space, const Poly& target, const Poly& f, int degree);

BpeReport bpe_estimate(const SpaceSpec& space, cplx zeta, int n_max);

/// Hermitian PD solve with an eigenvalue condition gate: LLT for
/// well-conditioned systems, pivoted LDLT past 1e8, singular_gram_error past
/// the 1e12 cutoff.
Eigen::VectorXcd solve_gram(const Eigen::MatrixXcd& gram, const Eigen::VectorXcd& rhs);

/// Minimal-norm solution of a Hermitian PSD normal-equation system via
/// eigenvalue truncation. Rank deficiency is legitimate here (overlapping
/// spans); only the identically-zero system is rejected.
Eigen::VectorXcd solve_gram_minimal_norm(const Eigen::MatrixXcd& gram, const Eigen::VectorXcd& rhs);

}  // namespace cyclab

#endif
