#include "cyclab/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclab/errors.hpp"
#include "cyclab/rat.hpp"

namespace cyclab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_inner_product(const SpaceSpec& space, const char* who) {
  if (!space.is_inner_product())
    throw non_hilbert_error(std::string(who) + ": requires an inner-product space");
}

/// Normal-equation data for min || sum_k c_k z^k f - target ||.
struct LeastSquares {
  Eigen::MatrixXcd gram;
  Eigen::VectorXcd rhs;
  std::vector<Poly> basis;
};

LeastSquares build_ls(const SpaceSpec& space, const Poly& f, const Poly& target, int degree) {
  LeastSquares ls;
  const int n = degree + 1;
  ls.basis.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) ls.basis.push_back(Poly::monomial(k) * f);
  ls.gram.resize(n, n);
  ls.rhs.resize(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k <= j; ++k) {
      const cplx v = inner(space, ls.basis[static_cast<size_t>(k)], ls.basis[static_cast<size_t>(j)]);
      ls.gram(j, k) = v;
      ls.gram(k, j) = std::conj(v);
    }
    ls.rhs(j) = inner(space, target, ls.basis[static_cast<size_t>(j)]);
  }
  return ls;
}

Poly poly_from_vector(const Eigen::VectorXcd& v) {
  std::vector<cplx> c(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) c[static_cast<size_t>(i)] = v(i);
  return Poly(std::move(c));
}

}  // namespace

Eigen::VectorXcd solve_gram_minimal_norm(const Eigen::MatrixXcd& gram, const Eigen::VectorXcd& rhs) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(hi > 0.0)) throw singular_gram_error("solve_gram_minimal_norm: zero system");
  const double cutoff = hi * 1e-13;
  Eigen::VectorXcd y = eig.eigenvectors().adjoint() * rhs;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    y(i) = eig.eigenvalues()(i) > cutoff ? y(i) / eig.eigenvalues()(i) : cplx(0.0);
  return eig.eigenvectors() * y;
}

Eigen::VectorXcd solve_gram(const Eigen::MatrixXcd& gram, const Eigen::VectorXcd& rhs) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(hi > 0.0) || lo <= hi * 1e-12)
    throw singular_gram_error("solve_gram: condition number above 1e12");
  if (lo < hi * 1e-8) {
    // Symmetric-pivot fallback for poorly conditioned sections.
    return Eigen::LDLT<Eigen::MatrixXcd>(gram).solve(rhs);
  }
  Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success) return Eigen::LDLT<Eigen::MatrixXcd>(gram).solve(rhs);
  return llt.solve(rhs);
}

ApproximantResult opa(const SpaceSpec& space, const Poly& f, int degree) {
  if (f.is_zero()) throw std::invalid_argument("opa: f is the zero polynomial");
  if (degree < 0) throw std::invalid_argument("opa: degree must be nonnegative");
  require_inner_product(space, "opa");

  const LeastSquares ls = build_ls(space, f, Poly::one(), degree);
  const Eigen::VectorXcd c = solve_gram(ls.gram, ls.rhs);

  ApproximantResult out;
  out.degree = degree;
  out.coefficients = poly_from_vector(c);
  out.residual_poly = out.coefficients * f - Poly::one();
  out.distance = norm(space, out.residual_poly);
  return out;
}

double dist_to_span(const SpaceSpec& space, const Poly& target, const Poly& f, int degree) {
  if (f.is_zero()) throw std::invalid_argument("dist_to_span: f is the zero polynomial");
  require_inner_product(space, "dist_to_span");
  const LeastSquares ls = build_ls(space, f, target, degree);
  const Eigen::VectorXcd c = solve_gram(ls.gram, ls.rhs);
  const Poly residual = poly_from_vector(c) * f - target;
  return norm(space, residual);
}

std::vector<int> default_degree_schedule(int n_max) {
  if (n_max < 0) throw std::invalid_argument("degree schedule: n_max must be nonnegative");
  std::vector<int> s{0};
  for (int n = 1; n < n_max; n *= 2) s.push_back(n);
  if (n_max >= 2) s.push_back(n_max / 2);
  if (n_max >= 1) s.push_back(n_max);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

namespace {

DecayFit fit_decay(const std::vector<int>& degrees, const std::vector<double>& distances) {
  // Fit on the tail (largest half of the schedule, n >= 2).
  std::vector<double> ns, ds;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] >= 2 && 2 * i >= degrees.size()) {
      ns.push_back(double(degrees[i]));
      ds.push_back(std::max(distances[i], 1e-300));
    }
  }
  DecayFit best;
  if (ns.size() < 2) {
    best.model = "plateau";
    best.c = distances.empty() ? 0.0 : distances.back();
    return best;
  }
  auto rms = [&](auto&& predict) {
    double s = 0.0;
    for (size_t i = 0; i < ns.size(); ++i) {
      const double e = predict(ns[i]) - ds[i];
      s += e * e;
    }
    return std::sqrt(s / double(ns.size()));
  };

  // c / log n by linear least squares in c.
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < ns.size(); ++i) {
    const double u = 1.0 / std::log(ns[i]);
    num += ds[i] * u;
    den += u * u;
  }
  const double c_log = den > 0.0 ? num / den : 0.0;
  DecayFit log_fit{"c/log(n)", c_log, 0.0, rms([&](double n) { return c_log / std::log(n); })};

  // c / n^beta by ordinary least squares in log-log space.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(ns[i]);
    const double y = std::log(ds[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = double(ns.size());
  const double beta = -(m * sxy - sx * sy) / std::max(1e-300, m * sxx - sx * sx);
  const double logc = (sy + beta * sx) / m;
  const double c_pow = std::exp(logc);
  DecayFit pow_fit{"c/n^beta", c_pow, beta,
                   rms([&](double n) { return c_pow * std::pow(n, -beta); })};

  // Plateau: constant at the tail mean.
  double mean = 0.0;
  for (double d : ds) mean += d;
  mean /= double(ds.size());
  DecayFit flat{"plateau", mean, 0.0, rms([&](double) { return mean; })};

  best = log_fit;
  if (pow_fit.residual < best.residual) best = pow_fit;
  if (flat.residual < best.residual) best = flat;
  return best;
}

}  // namespace

CyclicityReport cyclicity_scan(const SpaceSpec& space, const Poly& f, int n_max,
                               std::vector<int> schedule) {
  if (schedule.empty()) schedule = default_degree_schedule(n_max);
  std::sort(schedule.begin(), schedule.end());
  schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());

  CyclicityReport report;
  for (int n : schedule) {
    report.degrees.push_back(n);
    report.distances.push_back(opa(space, f, n).distance);
  }
  report.decay_fit = fit_decay(report.degrees, report.distances);

  const double d_last = report.distances.back();
  double d_half = d_last;
  const int half = schedule.back() / 2;
  for (size_t i = 0; i < report.degrees.size(); ++i) {
    if (report.degrees[i] >= half) {
      d_half = report.distances[i];
      break;
    }
  }
  const bool plateau = d_last >= report.plateau_floor &&
                       std::abs(d_last - d_half) <= report.plateau_tolerance * std::max(d_last, 1e-300);
  report.verdict = plateau ? "plateau" : "decaying";
  return report;
}

BpeReport bpe_estimate(const SpaceSpec& space, cplx zeta, int n_max) {
  require_inner_product(space, "bpe_estimate");
  if (n_max < 1) throw std::invalid_argument("bpe_estimate: n_max must be at least 1");
  BpeReport report;
  report.zeta = zeta;

  const GramMatrix gram = monomial_gram(space, n_max);
  std::vector<int> schedule;
  for (int n = 1; n < n_max; n *= 2) schedule.push_back(n);
  schedule.push_back(std::max(1, n_max / 2));
  schedule.push_back(n_max);
  std::sort(schedule.begin(), schedule.end());
  schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());

  for (int n : schedule) {
    Eigen::VectorXcd e(n + 1);
    cplx zk(1.0);
    for (int k = 0; k <= n; ++k) {
      e(k) = zk;
      zk *= zeta;
    }
    const Eigen::MatrixXcd section = gram.entries.topLeftCorner(n + 1, n + 1);
    const Eigen::VectorXcd x = solve_gram(section, e);
    const double v2 = std::max(0.0, (e.adjoint() * x)(0, 0).real());
    report.degrees.push_back(n);
    report.values.push_back(std::sqrt(v2));
  }

  const double v_last = report.values.back();
  double v_half = v_last;
  const int half = n_max / 2;
  for (size_t i = 0; i < report.degrees.size(); ++i) {
    if (report.degrees[i] >= half) {
      v_half = report.values[i];
      break;
    }
  }
  report.bounded_flag = (v_last - v_half) <= report.cauchy_threshold * std::max(v_last, 1e-300);
  return report;
}

// ---------------------------------------------------------------------------
// Descent path for Besov p-norm objectives.

namespace {

struct DescentObjective {
  // Affine data: A0(c) = c_0 f(0) - 1; B_i(c) = sum_k c_k D_k(z_i).
  cplx f0;
  double p = 2.0;
  double alpha = 0.0;
  std::vector<cplx> nodes;       // quadrature points
  std::vector<double> weights;   // (1+alpha) * radial weight / angular count
  Eigen::MatrixXcd basis_deriv;  // nodes x (degree+1), entries (z^k f)'(z_i)

  double value(const Eigen::VectorXcd& c) const {
    const cplx a0 = c(0) * f0 - 1.0;
    double v = std::pow(std::abs(a0), p);
    const Eigen::VectorXcd b = basis_deriv * c;
    for (Eigen::Index i = 0; i < b.size(); ++i)
      v += weights[static_cast<size_t>(i)] * std::pow(std::abs(b(i)), p);
    return v;
  }

  // Wirtinger gradient dPhi/dconj(c); real gradient is (2 Re, 2 Im).
  Eigen::VectorXcd gradient(const Eigen::VectorXcd& c) const {
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(c.size());
    const cplx a0 = c(0) * f0 - 1.0;
    const double m0 = std::abs(a0);
    if (m0 > 0.0) g(0) += 0.5 * p * std::pow(m0, p - 2.0) * a0 * std::conj(f0);
    const Eigen::VectorXcd b = basis_deriv * c;
    Eigen::VectorXcd scaled = Eigen::VectorXcd::Zero(b.size());
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      const double mb = std::abs(b(i));
      if (mb > 0.0)
        scaled(i) = weights[static_cast<size_t>(i)] * 0.5 * p * std::pow(mb, p - 2.0) * b(i);
    }
    g += basis_deriv.adjoint() * scaled;
    return g;
  }
};

}  // namespace

ApproximantResult opa_descent(const SpaceSpec& space, const Poly& f, int degree,
                              const DescentParams& params) {
  const auto* bd = std::get_if<BesovDirichletSpec>(&space.kind);
  if (bd == nullptr)
    throw std::invalid_argument("opa_descent: requires a Besov-Dirichlet space");
  if (bd->p <= 1.0) throw std::invalid_argument("opa_descent: p must exceed 1 for strict convexity");
  if (f.is_zero()) throw std::invalid_argument("opa_descent: f is the zero polynomial");

  const int n = degree + 1;
  DescentObjective obj;
  obj.f0 = f(cplx(0.0));
  obj.p = bd->p;
  obj.alpha = bd->alpha;

  const RadialRule rule = gauss_jacobi_01(space.quadrature.radial_nodes, bd->alpha);
  const int na = space.quadrature.angular_nodes;
  obj.nodes.reserve(rule.nodes.size() * static_cast<size_t>(na));
  obj.weights.reserve(obj.nodes.capacity());
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = std::sqrt(rule.nodes[i]);
    const double w = (1.0 + bd->alpha) * rule.weights[i] / double(na);
    for (int j = 0; j < na; ++j) {
      obj.nodes.push_back(std::polar(r, 2.0 * kPi * j / na));
      obj.weights.push_back(w);
    }
  }
  obj.basis_deriv.resize(static_cast<Eigen::Index>(obj.nodes.size()), n);
  for (int k = 0; k < n; ++k) {
    const Poly dk = (Poly::monomial(k) * f).derivative();
    for (size_t i = 0; i < obj.nodes.size(); ++i)
      obj.basis_deriv(static_cast<Eigen::Index>(i), k) = dk(obj.nodes[i]);
  }

  // Start from the Hardy-space minimiser: cheap and already close.
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n);
  {
    const ApproximantResult warm = opa(SpaceSpec::hardy(), f, degree);
    for (int k = 0; k < n; ++k) c(k) = warm.coefficients.coeff(k);
  }

  // BFGS on the 2n real coordinates.
  const int dim = 2 * n;
  auto pack = [&](const Eigen::VectorXcd& z) {
    Eigen::VectorXd x(dim);
    for (int k = 0; k < n; ++k) {
      x(2 * k) = z(k).real();
      x(2 * k + 1) = z(k).imag();
    }
    return x;
  };
  auto unpack = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXcd z(n);
    for (int k = 0; k < n; ++k) z(k) = cplx(x(2 * k), x(2 * k + 1));
    return z;
  };
  auto real_grad = [&](const Eigen::VectorXcd& z) {
    const Eigen::VectorXcd g = obj.gradient(z);
    Eigen::VectorXd out(dim);
    for (int k = 0; k < n; ++k) {
      out(2 * k) = 2.0 * g(k).real();
      out(2 * k + 1) = 2.0 * g(k).imag();
    }
    return out;
  };

  Eigen::VectorXd x = pack(c);
  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(dim, dim);
  double fx = obj.value(unpack(x));
  Eigen::VectorXd gx = real_grad(unpack(x));
  bool converged = false;
  bool scaled_h = false;
  int stalls = 0;
  for (int it = 0; it < params.max_iters; ++it) {
    if (gx.norm() <= params.grad_tol) {
      converged = true;
      break;
    }
    Eigen::VectorXd dir = -h_inv * gx;
    if (dir.dot(gx) >= 0.0) dir = -gx;  // reset on loss of descent
    double step = 1.0;
    const double slope = dir.dot(gx);
    // Accept up to the floating-point noise floor of the objective; near the
    // optimum the Armijo decrease falls below representable resolution.
    const double noise = 16.0 * std::numeric_limits<double>::epsilon() * std::abs(fx);
    double f_new = 0.0;
    Eigen::VectorXd x_new;
    bool ok = false;
    for (int ls = 0; ls < 60; ++ls) {
      x_new = x + step * dir;
      f_new = obj.value(unpack(x_new));
      if (f_new <= fx + 1e-4 * step * slope + noise) {
        ok = true;
        break;
      }
      step *= 0.5;
    }
    if (!ok) {
      h_inv = Eigen::MatrixXd::Identity(dim, dim);
      scaled_h = false;
      if (++stalls >= 3) break;  // objective at machine resolution
      continue;
    }
    stalls = 0;
    const Eigen::VectorXd g_new = real_grad(unpack(x_new));
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - gx;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      if (!scaled_h) {
        h_inv *= sy / y.squaredNorm();
        scaled_h = true;
      }
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd i_mat = Eigen::MatrixXd::Identity(dim, dim);
      h_inv = (i_mat - rho * s * y.transpose()) * h_inv * (i_mat - rho * y * s.transpose()) +
              rho * s * s.transpose();
    }
    x = x_new;
    fx = f_new;
    gx = g_new;
  }
  if (!converged && gx.norm() > params.grad_tol)
    throw non_convergence_error("opa_descent: gradient norm " + std::to_string(gx.norm()) +
                                " after iteration budget");

  ApproximantResult out;
  out.degree = degree;
  out.coefficients = poly_from_vector(unpack(x));
  out.residual_poly = out.coefficients * f - Poly::one();
  out.distance = std::pow(obj.value(unpack(x)), 1.0 / bd->p);
  return out;
}

}  // namespace cyclab
