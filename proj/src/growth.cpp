#include "cyclab/growth.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cyclab/errors.hpp"
#include "cyclab/rat.hpp"

namespace cyclab {

namespace {

double beta_fn(double x, double y) {
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

double loglog_slope(const std::vector<int>& ns, const std::vector<double>& vs) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 2 || vs[i] <= 0.0) continue;
    const double x = std::log(double(ns[i]));
    const double y = std::log(vs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  return (m * sxy - sx * sy) / std::max(1e-300, m * sxx - sx * sx);
}

void finalize_margin(GrowthReport& report) {
  double margin = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < report.compared.size(); ++i)
    margin = std::min(margin, report.bounds[i] - report.compared[i]);
  report.bound_margin = report.compared.empty() ? 0.0 : margin;
  report.fitted_exponent = loglog_slope(report.indices, report.values);
}

}  // namespace

GrowthReport monomial_growth_besov_algebra(double p, double alpha, int n_max) {
  if (p < 1.0 || alpha <= -1.0) throw std::invalid_argument("monomial_growth: bad Besov parameters");
  GrowthReport report;
  report.designation = "besov-algebra(p=" + std::to_string(p) + ",alpha=" + std::to_string(alpha) + ")";
  for (int n = 0; n <= n_max; ++n) {
    // ||chi_n||_A^p = 1 + n^p int_D r^{(n-1)p} (1-r^2)^alpha dA
    //              = 1 + n^p B((n-1)p/2 + 1, alpha+1).
    double np = n == 0 ? 0.0 : std::pow(double(n), p);
    double value_p = 1.0 + (n == 0 ? 0.0 : np * beta_fn((n - 1) * p / 2.0 + 1.0, alpha + 1.0));
    report.indices.push_back(n);
    report.values.push_back(std::pow(value_p, 1.0 / p));
    report.compared.push_back(value_p);
    report.bounds.push_back(1.0 + np / (alpha + 1.0));
    report.bound_curve.push_back(std::pow(1.0 + np / (alpha + 1.0), 1.0 / p));
  }
  finalize_margin(report);
  return report;
}

GrowthReport monomial_growth_hb(const RationalMate& mate, int n_max, int fit_cutoff) {
  GrowthReport report;
  report.designation = "hb-norm(N=" + std::to_string(mate.N) + ")";
  const auto c = mate_c_prefix(mate, n_max);
  const double exponent = 2.0 * mate.N + 1.0;

  std::vector<double> partial(static_cast<size_t>(n_max) + 1);
  double s = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    s += std::norm(c[static_cast<size_t>(n)]);
    partial[static_cast<size_t>(n)] = s;
  }
  double fitted_c = 0.0;
  for (int n = 1; n <= std::min(fit_cutoff, n_max); ++n)
    fitted_c = std::max(fitted_c, partial[static_cast<size_t>(n)] / std::pow(double(n), exponent));

  for (int n = 0; n <= n_max; ++n) {
    report.indices.push_back(n);
    report.values.push_back(std::sqrt(1.0 + partial[static_cast<size_t>(n)]));
    if (n >= 1) {
      report.compared.push_back(partial[static_cast<size_t>(n)]);
      report.bounds.push_back(fitted_c * std::pow(double(n), exponent));
      report.bound_curve.push_back(std::sqrt(1.0 + fitted_c * std::pow(double(n), exponent)));
    } else {
      report.bound_curve.push_back(report.values.back());
    }
  }
  finalize_margin(report);
  return report;
}

std::vector<Poly> dmu_default_witnesses() {
  return {Poly::one(), Poly{cplx(1.0), cplx(1.0)}, Poly{cplx(1.0), cplx(-1.0)}};
}

GrowthReport monomial_growth_dmu_surrogate(const MeasureAtoms& atoms, int n_max,
                                           const std::vector<Poly>& witnesses) {
  if (witnesses.empty()) throw std::invalid_argument("monomial_growth: empty witness set");
  GrowthReport report;
  report.designation = "dmu-multiplier-surrogate";
  const SpaceSpec space = SpaceSpec::harmonic_dirichlet(atoms);

  std::vector<double> wit_norms, wit_l2;
  for (const auto& f : witnesses) {
    wit_norms.push_back(norm(space, f));
    wit_l2.push_back(f.coeff_l2());
  }

  for (int n = 0; n <= n_max; ++n) {
    const Poly chi = Poly::monomial(n);
    double ratio = 0.0;
    for (size_t i = 0; i < witnesses.size(); ++i) {
      const Poly prod = chi * witnesses[i];
      ratio = std::max(ratio, norm(space, prod) / wit_norms[i]);
      for (const auto& atom : atoms.atoms) {
        const double lhs = local_dirichlet(prod, atom.location);
        const double rhs = 2.0 * double(n) * double(n) * wit_l2[i] * wit_l2[i] +
                           2.0 * local_dirichlet(witnesses[i], atom.location);
        report.compared.push_back(lhs);
        report.bounds.push_back(rhs);
      }
    }
    report.indices.push_back(n);
    report.values.push_back(ratio);
  }
  // reference line C n with C fitted over the computed range
  double line_c = 0.0;
  for (size_t i = 0; i < report.indices.size(); ++i)
    if (report.indices[i] >= 1) line_c = std::max(line_c, report.values[i] / report.indices[i]);
  for (size_t i = 0; i < report.indices.size(); ++i)
    report.bound_curve.push_back(report.indices[i] >= 1 ? line_c * report.indices[i]
                                                        : report.values[i]);
  finalize_margin(report);
  return report;
}

MultiplierCheck multiplier_inequality_check(const SpaceSpec& space, const Poly& phi, int n_max) {
  if (!space.is_inner_product())
    throw non_hilbert_error("multiplier_inequality_check: requires an inner-product space");
  MultiplierCheck out;
  out.sup_norm = sup_circle(phi);
  out.space_norm = norm(space, phi);

  const int n = n_max + 1;
  Eigen::MatrixXcd a(n, n);
  std::vector<Poly> basis;
  basis.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) basis.push_back(Poly::monomial(k) * phi);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k <= j; ++k) {
      const cplx v = inner(space, basis[static_cast<size_t>(k)], basis[static_cast<size_t>(j)]);
      a(j, k) = v;
      a(k, j) = std::conj(v);
    }
  }
  const GramMatrix gram = monomial_gram(space, n_max);

  double lam_max = 0.0;
  if (std::holds_alternative<HardySpec>(space.kind)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a, Eigen::EigenvaluesOnly);
    lam_max = eig.eigenvalues().maxCoeff();
  } else {
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a, gram.entries,
                                                                   Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    if (eig.info() != Eigen::Success)
      throw singular_gram_error("multiplier_inequality_check: generalized eigensolve failed");
    lam_max = eig.eigenvalues().maxCoeff();
  }
  out.op_norm_lower = std::sqrt(std::max(0.0, lam_max));
  return out;
}

ResolventCheck resolvent_bound_check(const std::vector<double>& c_seq, int p, cplx lambda) {
  const double lam = std::abs(lambda);
  if (lam <= 1.0 + 1e-6) throw std::invalid_argument("resolvent_bound_check: series diverges for |lambda| <= 1");
  if (p < 0) throw std::invalid_argument("resolvent_bound_check: p must be nonnegative");
  if (c_seq.empty()) throw std::invalid_argument("resolvent_bound_check: empty norm sequence");

  ResolventCheck out;
  double c_fit = 0.0;
  for (size_t n = 0; n < c_seq.size(); ++n)
    c_fit = std::max(c_fit, c_seq[n] / std::pow(std::max<double>(1.0, double(n)), p));
  out.fitted_C = c_fit;

  const double x = 1.0 / lam;
  double series = 0.0;
  for (size_t n = 0; n < c_seq.size(); ++n) series += c_seq[n] * std::pow(x, double(n) + 1.0);
  // Continue with the dominating model C n^p until the geometric tail bound
  // drops below 1e-12.
  size_t n = c_seq.size();
  while (true) {
    const double term = c_fit * std::pow(double(n), p) * std::pow(x, double(n) + 1.0);
    const double growth = x * std::pow(1.0 + 1.0 / double(n), p);
    if (growth < 1.0 && term / (1.0 - growth) < 1e-12) break;
    series += term;
    ++n;
    if (n > 10'000'000) throw non_convergence_error("resolvent_bound_check: tail did not close");
  }
  out.series_value = series;

  double p_factorial = 1.0;
  for (int k = 2; k <= p; ++k) p_factorial *= k;
  out.paper_bound = c_fit * p_factorial * std::pow(lam, p + 1.0) / std::pow(lam - 1.0, p + 1.0);
  return out;
}

PowerSumCheck power_sum_inequality(int p, double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("power_sum_inequality: x must lie in (0,1)");
  if (p < 0) throw std::invalid_argument("power_sum_inequality: p must be nonnegative");
  PowerSumCheck out;
  double sum = 0.0;
  size_t n = 1;
  while (true) {
    const double term = std::pow(double(n), p) * std::pow(x, double(n));
    sum += term;
    const double growth = x * std::pow(1.0 + 1.0 / double(n), p);
    if (growth < 1.0 && term * growth / (1.0 - growth) < 1e-14) break;
    ++n;
    if (n > 100'000'000) throw non_convergence_error("power_sum_inequality: tail did not close");
  }
  out.lhs = (p == 0 ? 1.0 : 0.0) + sum;  // n = 0 term is 1 for p = 0 (0^0 = 1)
  double p_factorial = 1.0;
  for (int k = 2; k <= p; ++k) p_factorial *= k;
  out.rhs = p_factorial / std::pow(1.0 - x, p + 1.0);
  return out;
}

}  // namespace cyclab
