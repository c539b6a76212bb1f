#include "cyclab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclab/errors.hpp"
#include "cyclab/rat.hpp"

namespace cyclab {

namespace {

constexpr double kPi = std::numbers::pi;

double beta_fn(double x, double y) {
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

/// <chi_k, chi_k> in D_alpha (k >= 1): (1+alpha) k^2 B(k, alpha+1) with
/// normalized area measure.
double wd_monomial_weight(int k, double alpha) {
  if (k == 0) return 1.0;
  return (1.0 + alpha) * double(k) * double(k) * beta_fn(double(k), alpha + 1.0);
}

cplx hardy_inner(const Poly& f, const Poly& g) {
  const int d = std::min(f.degree(), g.degree());
  cplx s(0.0);
  for (int k = 0; k <= d; ++k) s += f.coeff(k) * std::conj(g.coeff(k));
  return s;
}

cplx wd_inner(const Poly& f, const Poly& g, double alpha) {
  cplx s = f.coeff(0) * std::conj(g.coeff(0));
  const int d = std::min(f.degree(), g.degree());
  for (int k = 1; k <= d; ++k) s += wd_monomial_weight(k, alpha) * f.coeff(k) * std::conj(g.coeff(k));
  return s;
}

/// Coefficients of the plus function f+ = sum_m f_m (chi_m)+ with
/// (chi_m)+ = sum_{j<=m} conj(c_j) z^{m-j}.
std::vector<cplx> plus_coeffs(const Poly& f, const std::vector<cplx>& c) {
  const int d = f.degree();
  if (d < 0) return {};
  std::vector<cplx> out(static_cast<size_t>(d) + 1, cplx(0.0));
  for (int k = 0; k <= d; ++k)
    for (int m = k; m <= d; ++m) out[static_cast<size_t>(k)] += f.coeff(m) * std::conj(c[static_cast<size_t>(m - k)]);
  return out;
}

cplx hb_inner(const Poly& f, const Poly& g, const RationalMate& mate) {
  const int d = std::max(f.degree(), g.degree());
  if (d < 0) return cplx(0.0);
  const auto c = mate_c_prefix(mate, d);
  const auto fp = plus_coeffs(f, c);
  const auto gp = plus_coeffs(g, c);
  cplx s = hardy_inner(f, g);
  for (size_t k = 0; k < std::min(fp.size(), gp.size()); ++k) s += fp[k] * std::conj(gp[k]);
  return s;
}

cplx dmu_inner(const Poly& f, const Poly& g, const MeasureAtoms& atoms) {
  cplx s = hardy_inner(f, g);
  for (const auto& atom : atoms.atoms) s += atom.weight * local_dirichlet_pairing(f, g, atom.location);
  return s;
}

void validate_atoms(const MeasureAtoms& atoms) {
  if (atoms.atoms.empty()) throw std::invalid_argument("measure: no atoms");
  for (const auto& a : atoms.atoms) {
    if (!(a.weight > 0.0)) throw std::invalid_argument("measure: weights must be positive");
    if (std::abs(a.location) > 1.0 + 1e-12) throw std::invalid_argument("measure: atom outside the closed disc");
  }
}

}  // namespace

double MeasureAtoms::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

SpaceSpec SpaceSpec::hardy() { return SpaceSpec{HardySpec{}, {}}; }

SpaceSpec SpaceSpec::weighted_dirichlet(double alpha) {
  if (alpha <= -1.0) throw std::invalid_argument("weighted_dirichlet: alpha must exceed -1");
  return SpaceSpec{WeightedDirichletSpec{alpha}, {}};
}

SpaceSpec SpaceSpec::besov_dirichlet(double p, double alpha) {
  if (p <= 1.0) throw std::invalid_argument("besov_dirichlet: p must exceed 1");
  if (alpha <= -1.0) throw std::invalid_argument("besov_dirichlet: alpha must exceed -1");
  return SpaceSpec{BesovDirichletSpec{p, alpha}, {}};
}

SpaceSpec SpaceSpec::de_branges_rovnyak(RationalMate mate) {
  return SpaceSpec{DeBrangesRovnyakSpec{std::move(mate)}, {}};
}

SpaceSpec SpaceSpec::harmonic_dirichlet(MeasureAtoms atoms) {
  validate_atoms(atoms);
  return SpaceSpec{HarmonicDirichletSpec{std::move(atoms)}, {}};
}

bool SpaceSpec::is_inner_product() const {
  if (const auto* b = std::get_if<BesovDirichletSpec>(&kind)) return b->p == 2.0;
  return true;
}

bool SpaceSpec::besov_outside_standard_range() const {
  if (const auto* b = std::get_if<BesovDirichletSpec>(&kind))
    return !(b->alpha + 1.0 <= b->p && b->p <= b->alpha + 2.0);
  return false;
}

std::string SpaceSpec::name() const {
  struct Visitor {
    std::string operator()(const HardySpec&) const { return "hardy"; }
    std::string operator()(const WeightedDirichletSpec& s) const {
      return "weighted-dirichlet(alpha=" + std::to_string(s.alpha) + ")";
    }
    std::string operator()(const BesovDirichletSpec& s) const {
      return "besov-dirichlet(p=" + std::to_string(s.p) + ",alpha=" + std::to_string(s.alpha) + ")";
    }
    std::string operator()(const DeBrangesRovnyakSpec&) const { return "de-branges-rovnyak"; }
    std::string operator()(const HarmonicDirichletSpec&) const { return "harmonic-dirichlet"; }
  };
  return std::visit(Visitor{}, kind);
}

bool GramMatrix::is_hermitian(double tol) const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, entries.cwiseAbs().maxCoeff());
}

bool GramMatrix::is_psd(double tol_scale) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return ev.minCoeff() >= -tol_scale * std::max(1e-300, ev.maxCoeff());
}

cplx inner(const SpaceSpec& space, const Poly& f, const Poly& g) {
  struct Visitor {
    const Poly& f;
    const Poly& g;
    cplx operator()(const HardySpec&) const { return hardy_inner(f, g); }
    cplx operator()(const WeightedDirichletSpec& s) const { return wd_inner(f, g, s.alpha); }
    cplx operator()(const BesovDirichletSpec& s) const {
      if (s.p != 2.0) throw non_hilbert_error("inner: Besov-Dirichlet with p != 2 has no inner product");
      return wd_inner(f, g, s.alpha);
    }
    cplx operator()(const DeBrangesRovnyakSpec& s) const { return hb_inner(f, g, s.mate); }
    cplx operator()(const HarmonicDirichletSpec& s) const { return dmu_inner(f, g, s.atoms); }
  };
  return std::visit(Visitor{f, g}, space.kind);
}

GramMatrix monomial_gram(const SpaceSpec& space, int n_max) {
  if (n_max < 0) throw std::invalid_argument("monomial_gram: n_max must be nonnegative");
  const int n = n_max + 1;
  GramMatrix gram;
  gram.basis_label = "chi_0..chi_" + std::to_string(n_max);
  gram.entries = Eigen::MatrixXcd::Zero(n, n);

  if (std::holds_alternative<HardySpec>(space.kind)) {
    gram.entries = Eigen::MatrixXcd::Identity(n, n);
    return gram;
  }
  if (const auto* wd = std::get_if<WeightedDirichletSpec>(&space.kind)) {
    for (int k = 0; k < n; ++k) gram.entries(k, k) = wd_monomial_weight(k, wd->alpha);
    return gram;
  }
  if (const auto* bd = std::get_if<BesovDirichletSpec>(&space.kind)) {
    if (bd->p != 2.0) throw non_hilbert_error("monomial_gram: Besov-Dirichlet with p != 2");
    for (int k = 0; k < n; ++k) gram.entries(k, k) = wd_monomial_weight(k, bd->alpha);
    return gram;
  }
  if (const auto* hb = std::get_if<DeBrangesRovnyakSpec>(&space.kind)) {
    // G = I + C C* with C[m][j] = conj(c_{m-j}), j <= m.
    const auto c = mate_c_prefix(hb->mate, n_max);
    Eigen::MatrixXcd cm = Eigen::MatrixXcd::Zero(n, n);
    for (int m = 0; m < n; ++m)
      for (int j = 0; j <= m; ++j) cm(m, j) = std::conj(c[static_cast<size_t>(m - j)]);
    gram.entries = Eigen::MatrixXcd::Identity(n, n) + cm * cm.adjoint();
    return gram;
  }
  const auto& atoms = std::get<HarmonicDirichletSpec>(space.kind).atoms;
  validate_atoms(atoms);
  for (int m = 0; m < n; ++m) {
    for (int nn = 0; nn <= m; ++nn) {
      cplx entry = (m == nn) ? cplx(1.0) : cplx(0.0);
      for (const auto& atom : atoms.atoms) {
        const cplx z0 = atom.location;
        const int mn = std::min(m, nn);
        // <q_m, q_n> with q_k the synthetic quotient of chi_k at z0:
        // sum_{j=0}^{mn-1} z0^{m-1-j} conj(z0)^{n-1-j}.
        cplx s(0.0);
        cplx zm = std::pow(z0, m - mn);
        cplx zn = std::conj(std::pow(z0, nn - mn));
        cplx base = zm * zn;
        double r2 = std::norm(z0);
        double r2j = 1.0;
        for (int j = 0; j < mn; ++j) {
          s += base * r2j;
          r2j *= r2;
        }
        entry += atom.weight * s;
      }
      gram.entries(m, nn) = entry;
      gram.entries(nn, m) = std::conj(entry);
    }
  }
  return gram;
}

double besov_seminorm_integral(const Poly& fprime, double p, double alpha,
                               const QuadratureSpec& quad) {
  if (fprime.is_zero()) return 0.0;
  const RadialRule rule = gauss_jacobi_01(quad.radial_nodes, alpha);
  const int na = quad.angular_nodes;
  double total = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = std::sqrt(rule.nodes[i]);
    double mean = 0.0;
    for (int j = 0; j < na; ++j) {
      const cplx z = std::polar(r, 2.0 * kPi * j / na);
      mean += std::pow(std::abs(fprime(z)), p);
    }
    mean /= na;
    total += rule.weights[i] * mean;
  }
  return total;
}

namespace {

double besov_norm_value(const BesovDirichletSpec& s, const QuadratureSpec& quad, const Poly& f,
                        NormVariant variant) {
  const Poly fp = f.derivative();
  const double integral = besov_seminorm_integral(fp, s.p, s.alpha, quad);
  if (variant == NormVariant::algebra) {
    const double sup = sup_circle(f, std::max(quad.angular_nodes * 4, 1024));
    return std::pow(std::pow(sup, s.p) + integral, 1.0 / s.p);
  }
  const double head = std::pow(std::abs(f(cplx(0.0))), s.p);
  return std::pow(head + (1.0 + s.alpha) * integral, 1.0 / s.p);
}

}  // namespace

NormResult norm_checked(const SpaceSpec& space, const Poly& f, NormVariant variant) {
  NormResult out;
  const auto* bd = std::get_if<BesovDirichletSpec>(&space.kind);
  const bool quadrature_path = (bd != nullptr) && (bd->p != 2.0 || variant == NormVariant::algebra);
  if (quadrature_path) {
    out.value = besov_norm_value(*bd, space.quadrature, f, variant);
    QuadratureSpec doubled{space.quadrature.radial_nodes * 2, space.quadrature.angular_nodes * 2};
    const double refined = besov_norm_value(*bd, doubled, f, variant);
    out.quadrature_shift = std::abs(refined - out.value) / std::max(1e-300, std::abs(refined));
    out.quadrature_warning = out.quadrature_shift > 1e-6;
    return out;
  }
  if (variant == NormVariant::algebra) {
    // The algebra norm is a Besov-scale notion; other spaces expose only the
    // defining norm.
    throw std::invalid_argument("norm: algebra variant is only defined for Besov-Dirichlet spaces");
  }
  const cplx v = inner(space, f, f);
  out.value = std::sqrt(std::max(0.0, v.real()));
  return out;
}

double norm(const SpaceSpec& space, const Poly& f, NormVariant variant) {
  return norm_checked(space, f, variant).value;
}

cplx kernel(const SpaceSpec& space, cplx lambda, cplx z) {
  if (std::abs(lambda) >= 1.0 || std::abs(z) >= 1.0)
    throw std::invalid_argument("kernel: lambda and z must lie in the open disc");
  if (std::holds_alternative<HardySpec>(space.kind)) return 1.0 / (1.0 - std::conj(lambda) * z);
  if (const auto* hb = std::get_if<DeBrangesRovnyakSpec>(&space.kind)) {
    const cplx bl = hb->mate.b(lambda);
    const cplx bz = hb->mate.b(z);
    return (1.0 - std::conj(bl) * bz) / (1.0 - std::conj(lambda) * z);
  }
  throw std::invalid_argument("kernel: closed-form kernel available for Hardy and H(b) only");
}

double u_mu(const MeasureAtoms& atoms, cplx z) {
  validate_atoms(atoms);
  if (std::abs(z) >= 1.0) throw std::invalid_argument("u_mu: z must lie in the open disc");
  double total = 0.0;
  for (const auto& atom : atoms.atoms) {
    const cplx w = atom.location;
    if (MeasureAtoms::on_circle(w)) {
      total += atom.weight * (1.0 - std::norm(z)) / std::norm(w - z);
    } else {
      if (std::abs(z - w) < 1e-13)
        throw singularity_error("u_mu: z coincides with an interior atom");
      const double num = std::norm(1.0 - std::conj(w) * z);
      const double den = std::norm(z - w);
      total += atom.weight * std::log(num / den) / (1.0 - std::norm(w));
    }
  }
  return total;
}

double local_dirichlet(const Poly& g, cplx z) {
  const auto q = synth_div(g, z).quotient;
  double s = 0.0;
  for (const auto& c : q.coeffs()) s += std::norm(c);
  return s;
}

cplx local_dirichlet_pairing(const Poly& f, const Poly& g, cplx z) {
  const auto qf = synth_div(f, z).quotient;
  const auto qg = synth_div(g, z).quotient;
  return hardy_inner(qf, qg);
}

namespace {

// Angular Fourier data of |g'(r e^{i theta})|^2: H_k(r) = sum_l a_{l+k}
// conj(a_l) r^{2l+k} for k >= 0 (H_{-k} = conj(H_k)). All radial integrands
// below are polynomials in u = r^2, possibly against a log kernel.

// Boundary atom at e^{i phi}: the angular integral against the Poisson kernel
// replaces e^{ik theta} by r^{|k|} e^{ik phi}, yielding the u-polynomial
// P(u) = H_0 + 2 Re sum_{k>=1} e^{ik phi} sum_l a_{l+k} conj(a_l) u^{l+k}.
std::vector<double> boundary_radial_poly(const Poly& gprime, cplx zeta) {
  const int d = gprime.degree();
  std::vector<double> poly(static_cast<size_t>(std::max(0, 2 * d + 1)), 0.0);
  if (d < 0) return poly;
  const auto& a = gprime.coeffs();
  const double phi = std::arg(zeta);
  for (int l = 0; l <= d; ++l) poly[static_cast<size_t>(l)] += std::norm(a[static_cast<size_t>(l)]);
  for (int k = 1; k <= d; ++k) {
    const cplx e = std::polar(1.0, k * phi);
    for (int l = 0; l + k <= d; ++l) {
      const cplx term = a[static_cast<size_t>(l + k)] * std::conj(a[static_cast<size_t>(l)]) * e;
      poly[static_cast<size_t>(l + k)] += 2.0 * term.real();
    }
  }
  return poly;
}

double eval_real_poly(const std::vector<double>& poly, double u) {
  double acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * u + *it;
  return acc;
}

// Interior atom w0 != 0. Returns the disc integral of |g'|^2 K dA for
// K = log |(1 - conj(w0) z)/(z - w0)|^2 / (1 - |w0|^2), splitting the radial
// integral at u = |w0|^2. The k = 0 kernel harmonic contributes
// -2 log(max(r, rho)) / (1 - rho^2), handled in closed form on [rho^2, 1].
double interior_atom_integral(const Poly& gprime, cplx w0, const QuadratureSpec& quad) {
  const int d = gprime.degree();
  if (d < 0) return 0.0;
  const auto& a = gprime.coeffs();
  const double rho2 = std::norm(w0);
  const double inv = 1.0 / (1.0 - rho2);

  // H_0 as a u-polynomial.
  std::vector<double> h0(static_cast<size_t>(d) + 1, 0.0);
  for (int l = 0; l <= d; ++l) h0[static_cast<size_t>(l)] = std::norm(a[static_cast<size_t>(l)]);

  if (rho2 < 1e-28) {
    // K = -log u; integrate exactly: int_0^1 u^l (-log u) du = 1/(l+1)^2.
    double total = 0.0;
    for (int l = 0; l <= d; ++l) total += h0[static_cast<size_t>(l)] / ((l + 1.0) * (l + 1.0));
    return total;
  }

  // Inner piece [0, rho^2]: sum_{k>=1} 2 Re( H_k conj(kappa_k) ) with
  // conj(kappa_k) = u^{k/2}-free polynomial: coefficient (w0^{-k} -
  // conj(w0)^k)/ (k) ... assembled as a real u-polynomial; plus the constant
  // kernel harmonic -2 log rho.
  std::vector<double> inner_poly(static_cast<size_t>(2 * d + 1), 0.0);
  const double log_rho = 0.5 * std::log(rho2);
  for (int l = 0; l <= d; ++l) inner_poly[static_cast<size_t>(l)] += h0[static_cast<size_t>(l)] * (-2.0 * log_rho) * inv;
  for (int k = 1; k <= d; ++k) {
    const cplx coef = (std::pow(std::conj(w0), -k) - std::pow(w0, k)) * inv / double(k);
    for (int l = 0; l + k <= d; ++l) {
      const cplx term = a[static_cast<size_t>(l + k)] * std::conj(a[static_cast<size_t>(l)]) * coef;
      inner_poly[static_cast<size_t>(l + k)] += 2.0 * term.real();
    }
  }

  // Outer piece [rho^2, 1], k >= 1 harmonics: coefficient w0^k (u^l - u^{l+k}).
  std::vector<double> outer_poly(static_cast<size_t>(2 * d + 1), 0.0);
  for (int k = 1; k <= d; ++k) {
    const cplx coef = std::pow(w0, k) * inv / double(k);
    for (int l = 0; l + k <= d; ++l) {
      const cplx term = a[static_cast<size_t>(l + k)] * std::conj(a[static_cast<size_t>(l)]) * coef;
      outer_poly[static_cast<size_t>(l)] += 2.0 * term.real();
      outer_poly[static_cast<size_t>(l + k)] -= 2.0 * term.real();
    }
  }

  double total = 0.0;
  const RadialRule rin = gauss_legendre_ab(quad.radial_nodes, 0.0, rho2);
  for (size_t i = 0; i < rin.nodes.size(); ++i)
    total += rin.weights[i] * eval_real_poly(inner_poly, rin.nodes[i]);
  const RadialRule rout = gauss_legendre_ab(quad.radial_nodes, rho2, 1.0);
  for (size_t i = 0; i < rout.nodes.size(); ++i)
    total += rout.weights[i] * eval_real_poly(outer_poly, rout.nodes[i]);

  // k = 0 harmonic on [rho^2, 1]: -H_0(u) log(u) * inv, exact antiderivative.
  const double A = rho2;
  for (int l = 0; l <= d; ++l) {
    const double lp1 = l + 1.0;
    const double piece = (1.0 + std::pow(A, lp1) * (lp1 * std::log(A) - 1.0)) / (lp1 * lp1);
    total += h0[static_cast<size_t>(l)] * inv * piece;
  }
  return total;
}

}  // namespace

EnergyIdentityResult energy_identity_check(const MeasureAtoms& atoms, const Poly& g,
                                           const QuadratureSpec& quad) {
  validate_atoms(atoms);
  EnergyIdentityResult out;

  const Poly gp = g.derivative();
  auto lhs_with = [&](const QuadratureSpec& q) {
    double lhs = 0.0;
    const RadialRule radial = gauss_legendre_01(q.radial_nodes);
    for (const auto& atom : atoms.atoms) {
      if (MeasureAtoms::on_circle(atom.location)) {
        const auto poly = boundary_radial_poly(gp, atom.location);
        double integral = 0.0;
        for (size_t i = 0; i < radial.nodes.size(); ++i)
          integral += radial.weights[i] * eval_real_poly(poly, radial.nodes[i]);
        lhs += atom.weight * integral;
      } else {
        lhs += atom.weight * interior_atom_integral(gp, atom.location, q);
      }
    }
    return lhs;
  };

  out.lhs = lhs_with(quad);
  const double refined = lhs_with(QuadratureSpec{quad.radial_nodes * 2, quad.angular_nodes * 2});

  out.rhs = 0.0;
  for (const auto& atom : atoms.atoms) out.rhs += atom.weight * local_dirichlet(g, atom.location);

  const double scale = std::max({std::abs(out.lhs), std::abs(out.rhs), 1e-300});
  out.relative_gap = std::abs(out.lhs - out.rhs) / scale;
  out.quadrature_warning = std::abs(refined - out.lhs) / scale > 1e-6;
  return out;
}

}  // namespace cyclab
