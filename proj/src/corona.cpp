#include "cyclab/corona.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "cyclab/approximants.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/outerlab.hpp"

namespace cyclab {

namespace {

constexpr double kPi = std::numbers::pi;

// Radii packed toward the boundary (the delta_lambda quantities are
// boundary-dominated), plus the centre and the boundary circle itself.
std::vector<double> boundary_packed_radii(int count) {
  std::vector<double> radii{0.0};
  for (int i = 0; i < count; ++i) radii.push_back(std::cos(kPi * (2.0 * (count - 1 - i) + 1.0) / (4.0 * count)));
  radii.push_back(1.0);
  return radii;
}

GridInfimum grid_infimum(const std::function<double(cplx)>& fn, const DiscGridSpec& grid,
                         bool include_boundary = true) {
  GridInfimum out;
  out.grid = grid;
  double best = 0.0;
  cplx best_z(0.0);
  bool first = true;
  const auto radii = boundary_packed_radii(grid.radial);
  for (double r : radii) {
    if (!include_boundary && r >= 1.0) continue;
    const int na = r == 0.0 ? 1 : grid.angular;
    for (int j = 0; j < na; ++j) {
      const cplx z = std::polar(r, 2.0 * kPi * j / na);
      const double v = fn(z);
      if (first || v < best) {
        best = v;
        best_z = z;
        first = false;
      }
    }
  }

  // Local refinement around the minimiser in polar coordinates.
  double r0 = std::abs(best_z), t0 = std::arg(best_z);
  double dr = 1.0 / grid.radial, dt = 2.0 * kPi / grid.angular;
  for (int pass = 0; pass < grid.refine_passes; ++pass) {
    const int m = grid.refine_points;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        double r = r0 + dr * (2.0 * i / (m - 1) - 1.0);
        double t = t0 + dt * (2.0 * j / (m - 1) - 1.0);
        r = std::clamp(r, 0.0, include_boundary ? 1.0 : 1.0 - 1e-12);
        const cplx z = std::polar(r, t);
        const double v = fn(z);
        if (v < best) {
          best = v;
          best_z = z;
        }
      }
    }
    r0 = std::abs(best_z);
    t0 = std::arg(best_z);
    dr /= double(grid.refine_points / 2);
    dt /= double(grid.refine_points / 2);
  }
  out.value = best;
  out.argmin = best_z;
  return out;
}

void require_no_poles(const Rat& f, const char* who) {
  if (!holomorphic_on_closed_disc(f)) throw pole_error(std::string(who) + ": pole in the closed disc");
}

}  // namespace

GridInfimum delta_inf(const Rat& f1, const Rat& f2, const DiscGridSpec& grid) {
  require_no_poles(f1, "delta_inf");
  require_no_poles(f2, "delta_inf");
  return grid_infimum([&](cplx z) { return std::abs(f1(z)) + std::abs(f2(z)); }, grid);
}

CoronaInstance make_corona_instance(const Poly& f1, const Poly& f2, const DiscGridSpec& grid) {
  CoronaInstance inst;
  inst.f1 = f1;
  inst.f2 = f2;
  inst.delta = delta_inf(Rat::from_poly(f1), Rat::from_poly(f2), grid).value;
  // |f1| + |f2| is subharmonic, so the supremum sits on the circle.
  double sup = 0.0;
  for (int j = 0; j < grid.angular; ++j) {
    const cplx z = std::polar(1.0, 2.0 * kPi * j / grid.angular);
    sup = std::max(sup, std::abs(f1(z)) + std::abs(f2(z)));
  }
  inst.upper = sup;
  return inst;
}

BezoutSolution bezout_ls(const SpaceSpec& space, const CoronaInstance& inst, int degree) {
  if (!space.is_inner_product()) throw non_hilbert_error("bezout_ls: requires an inner-product space");
  if (!(inst.delta > 0.0)) throw std::invalid_argument("bezout_ls: delta must be positive");
  if (degree < 0) throw std::invalid_argument("bezout_ls: degree must be nonnegative");

  const int n = degree + 1;
  std::vector<Poly> basis;
  basis.reserve(static_cast<size_t>(2 * n));
  for (int k = 0; k < n; ++k) basis.push_back(Poly::monomial(k) * inst.f1);
  for (int k = 0; k < n; ++k) basis.push_back(Poly::monomial(k) * inst.f2);

  Eigen::MatrixXcd gram(2 * n, 2 * n);
  Eigen::VectorXcd rhs(2 * n);
  const Poly one = Poly::one();
  for (int j = 0; j < 2 * n; ++j) {
    for (int k = 0; k <= j; ++k) {
      const cplx v = inner(space, basis[static_cast<size_t>(k)], basis[static_cast<size_t>(j)]);
      gram(j, k) = v;
      gram(k, j) = std::conj(v);
    }
    rhs(j) = inner(space, one, basis[static_cast<size_t>(j)]);
  }

  // Past the Bezout degree the two spans overlap and the Gram is genuinely
  // rank-deficient; take the minimal-norm solution.
  Eigen::VectorXcd c;
  try {
    c = solve_gram_minimal_norm(gram, rhs);
  } catch (const singular_gram_error&) {
    throw singular_gram_error("bezout_ls: singular system (degenerate instance)");
  }

  BezoutSolution out;
  std::vector<cplx> c1(static_cast<size_t>(n)), c2(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    c1[static_cast<size_t>(k)] = c(k);
    c2[static_cast<size_t>(k)] = c(n + k);
  }
  out.g1 = Poly(std::move(c1));
  out.g2 = Poly(std::move(c2));
  const Poly combo = inst.f1 * out.g1 + inst.f2 * out.g2 - one;
  out.residual = norm(space, combo);
  out.g_norms = {norm(space, out.g1), norm(space, out.g2)};
  out.g_sup_norms = {sup_circle(out.g1), sup_circle(out.g2)};
  return out;
}

ExponentFit exponent_sweep(const SpaceSpec& space, const std::vector<CoronaInstance>& family,
                           const std::vector<int>& degree_schedule, double residual_target) {
  if (family.empty()) throw family_degenerate_error("exponent_sweep: empty family");
  double dmin = family.front().delta, dmax = dmin;
  for (const auto& inst : family) {
    dmin = std::min(dmin, inst.delta);
    dmax = std::max(dmax, inst.delta);
  }
  if (!(dmin > 0.0) || std::log10(dmax / dmin) < 1.5)
    throw std::invalid_argument("exponent_sweep: family must span at least 1.5 decades of delta");

  ExponentFit fit;
  for (const auto& inst : family) {
    SweepPoint pt;
    pt.delta = inst.delta;
    for (int degree : degree_schedule) {
      const BezoutSolution sol = bezout_ls(space, inst, degree);
      pt.residual = sol.residual;
      if (sol.residual < residual_target) {
        pt.degree = degree;
        pt.g1_norm = sol.g_sup_norms.first;
        pt.g2_norm = sol.g_sup_norms.second;
        pt.g1_space_norm = sol.g_norms.first;
        pt.g2_space_norm = sol.g_norms.second;
        break;
      }
    }
    fit.points.push_back(pt);
    if (pt.degree >= 0) {
      fit.deltas.push_back(pt.delta);
      fit.norms.push_back(std::max(pt.g1_norm, pt.g2_norm));
    }
  }
  if (fit.deltas.size() < 4)
    throw family_degenerate_error("exponent_sweep: fewer than 4 instances converged");

  // OLS of log(norm) on log(1/delta).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double m = double(fit.deltas.size());
  for (size_t i = 0; i < fit.deltas.size(); ++i) {
    const double x = std::log(1.0 / fit.deltas[i]);
    const double y = std::log(std::max(fit.norms[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.fitted_A = (m * sxy - sx * sy) / std::max(1e-300, m * sxx - sx * sx);
  fit.fitted_logC = (sy - fit.fitted_A * sx) / m;
  double rss = 0.0;
  for (size_t i = 0; i < fit.deltas.size(); ++i) {
    const double x = std::log(1.0 / fit.deltas[i]);
    const double y = std::log(std::max(fit.norms[i], 1e-300));
    const double e = y - (fit.fitted_logC + fit.fitted_A * x);
    rss += e * e;
  }
  fit.fit_residual = std::sqrt(rss / m);
  return fit;
}

DeltaLambdaResult delta_lambda_dominated(const Poly& f, const Poly& g, cplx lambda,
                                         const DiscGridSpec& grid) {
  if (lambda == cplx(0.0)) throw std::invalid_argument("delta_lambda_dominated: lambda must be nonzero");

  // Domination check |g| <= |f| on the same grid (tiny slack for roundoff).
  const auto radii = boundary_packed_radii(grid.radial);
  const double slack = 1e-12 * (1.0 + f.coeff_l1() + g.coeff_l1());
  for (double r : radii) {
    const int na = r == 0.0 ? 1 : grid.angular;
    for (int j = 0; j < na; ++j) {
      const cplx z = std::polar(r, 2.0 * kPi * j / na);
      if (std::abs(g(z)) > std::abs(f(z)) + slack)
        throw domination_error("delta_lambda_dominated: |g| > |f| at z = (" +
                               std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
    }
  }

  const GridInfimum inf = grid_infimum(
      [&](cplx z) { return std::abs(1.0 - lambda * g(z)) + std::abs(f(z)); }, grid);
  DeltaLambdaResult out;
  out.value = inf.value;
  out.argmin = inf.argmin;
  out.bound = std::min(0.5, 0.5 / std::abs(lambda));
  return out;
}

DeltaLambdaResult delta_lambda_outer(const Poly& f, cplx lambda, double eps,
                                     const DiscGridSpec& grid) {
  if (!(eps > 0.0)) throw std::invalid_argument("delta_lambda_outer: eps must be positive");
  const double lam = std::abs(lambda);
  if (std::abs(lam - 1.0) < 1e-12)
    throw std::invalid_argument("delta_lambda_outer: |lambda| = 1 rejected");
  if (!is_outer(f)) throw std::invalid_argument("delta_lambda_outer: f is not outer");

  // c_eps: grid infimum of |f(z)| exp(eps / (2(1-|z|))) over the open disc.
  const GridInfimum ce = grid_infimum(
      [&](cplx z) {
        const double d = 1.0 - std::abs(z);
        return std::abs(f(z)) * std::exp(eps / (2.0 * std::max(d, 1e-12)));
      },
      grid, /*include_boundary=*/false);

  const GridInfimum inf =
      grid_infimum([&](cplx z) { return std::abs(lambda - z) + std::abs(f(z)); }, grid);

  DeltaLambdaResult out;
  out.value = inf.value;
  out.argmin = inf.argmin;
  out.c_eps = ce.value;
  out.bound = std::min(ce.value * std::exp(-eps / (1.0 - lam)), std::abs(1.0 - lam) / 2.0);
  return out;
}

LogDominanceResult log_dominance_check_with_norm(const Poly& f, const Poly& g, double gamma,
                                                 double f_norm, const DiscGridSpec& grid) {
  if (!(gamma > 1.0)) throw std::invalid_argument("log_dominance_check: gamma must exceed 1");
  if (f.is_zero()) throw std::invalid_argument("log_dominance_check: f is identically zero");
  LogDominanceResult out;
  out.f_algebra_norm = f_norm;
  const auto radii = boundary_packed_radii(grid.radial);
  for (double r : radii) {
    if (r >= 1.0) continue;  // hypothesis is on the open disc
    const int na = r == 0.0 ? 1 : grid.angular;
    for (int j = 0; j < na; ++j) {
      const cplx z = std::polar(r, 2.0 * kPi * j / na);
      const cplx gz = g(z);
      if (gz.real() < 0.0) {
        out.holds = false;
        out.witness = z;
        out.reason = "Re g < 0";
        return out;
      }
      const double fz = std::abs(f(z));
      if (fz >= f_norm) {
        ++out.skipped_points;  // log ratio nonpositive: threshold undefined
        continue;
      }
      const double threshold = std::pow(std::log(f_norm / fz), -gamma);
      if (std::abs(gz) > threshold * (1.0 + 1e-12)) {
        out.holds = false;
        out.witness = z;
        out.reason = "|g| above the log threshold";
        return out;
      }
    }
  }
  return out;
}

LogDominanceResult log_dominance_check(const Poly& f, const Poly& g, double gamma,
                                       const SpaceSpec& space_for_norm, const DiscGridSpec& grid) {
  const double f_norm = norm(space_for_norm, f, NormVariant::algebra);
  return log_dominance_check_with_norm(f, g, gamma, f_norm, grid);
}

}  // namespace cyclab
