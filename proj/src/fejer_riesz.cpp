#include "cyclab/fejer_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclab/errors.hpp"
#include "cyclab/roots.hpp"

namespace cyclab {

namespace {

constexpr double kPi = std::numbers::pi;

// Newton iteration on the (k-1)-th derivative pins a multiplicity-k root to
// full precision; companion eigenvalues of a multiple root only carry
// accuracy eps^(1/k).
cplx polish_multiple(const Poly& t_poly, cplx center, int multiplicity) {
  Poly d = t_poly;
  for (int i = 0; i + 1 < multiplicity; ++i) d = d.derivative();
  const Poly dd = d.derivative();
  cplx z = center;
  for (int i = 0; i < 30; ++i) {
    const cplx den = dd(z);
    if (std::abs(den) < 1e-300) break;
    const cplx step = d(z) / den;
    z -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
  }
  return std::abs(z - center) < 0.1 * (1.0 + std::abs(center)) ? z : center;
}

struct Cluster {
  cplx center;
  int size = 0;
};

std::vector<Cluster> cluster_roots(const std::vector<cplx>& roots, double tol) {
  std::vector<Cluster> clusters;
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    // Grow the cluster around a running centroid.
    std::vector<size_t> members{i};
    used[i] = true;
    cplx centroid = roots[i];
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        if (std::abs(roots[j] - centroid) <= tol * (1.0 + std::abs(centroid))) {
          members.push_back(j);
          used[j] = true;
          centroid = cplx(0.0);
          for (size_t k : members) centroid += roots[k];
          centroid /= double(members.size());
          grew = true;
        }
      }
    }
    clusters.push_back({centroid, static_cast<int>(members.size())});
  }
  return clusters;
}

}  // namespace

FejerRieszResult fejer_riesz(const TrigPoly& t_in, const FejerRieszOptions& opt) {
  double coeff_scale = 0.0;
  for (int k = -t_in.order(); k <= t_in.order(); ++k) coeff_scale = std::max(coeff_scale, std::abs(t_in.coeff(k)));
  if (coeff_scale == 0.0) throw std::invalid_argument("fejer_riesz: t is identically zero");
  const TrigPoly t = t_in.trimmed(1e-13 * coeff_scale);

  double t_min = 0.0, t_max = 0.0, theta_star = 0.0;
  for (int j = 0; j < opt.grid; ++j) {
    const double theta = 2.0 * kPi * j / opt.grid;
    const double v = t(theta);
    if (j == 0 || v < t_min) t_min = v;
    if (j == 0 || v > t_max) {
      t_max = v;
      theta_star = theta;
    }
  }
  if (t_max <= 1e-14 * coeff_scale) throw std::invalid_argument("fejer_riesz: t is identically zero on the circle");
  if (t_min < -opt.negativity_tol * std::max(1.0, t_max))
    throw negativity_error("fejer_riesz: t negative on the circle (min " + std::to_string(t_min) + ")");

  const int n = t.order();
  FejerRieszResult result;
  if (n == 0) {
    result.factor = Poly{cplx(std::sqrt(std::max(0.0, t.coeff(0).real())))};
    result.factor_defect = std::abs(std::norm(result.factor.coeff(0)) - t.coeff(0).real());
    return result;
  }

  // T(z) = z^n t(z), degree 2n with T(0) = conj(t_n) != 0.
  std::vector<cplx> tc(static_cast<size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) tc[static_cast<size_t>(k + n)] = t.coeff(k);
  const Poly t_poly{std::move(tc)};
  std::vector<cplx> roots = companion_roots(t_poly);

  const double cluster_tol = std::min(5e-3, std::max(1e-7, std::pow(1e-13, 1.0 / (2.0 * n))));
  std::vector<Cluster> clusters = cluster_roots(roots, cluster_tol);

  std::vector<cplx> outside, inside, circle_singles;
  std::vector<std::pair<cplx, int>> circle_mult;

  for (const auto& cl : clusters) {
    if (cl.size >= 2) {
      const cplx u = polish_multiple(t_poly, cl.center, cl.size);
      if (std::abs(std::abs(u) - 1.0) <= 1e-6) {
        if (cl.size % 2 != 0)
          throw factorization_error("fejer_riesz: odd multiplicity circle root cluster");
        circle_mult.emplace_back(u / std::abs(u), cl.size / 2);
      } else if (std::abs(u) > 1.0) {
        outside.insert(outside.end(), static_cast<size_t>(cl.size), u);
      } else {
        inside.insert(inside.end(), static_cast<size_t>(cl.size), u);
      }
    } else {
      const cplx u = newton_polish(t_poly, cl.center, 4);
      const double r = std::abs(u);
      if (std::abs(r - 1.0) <= 1e-8) {
        circle_singles.push_back(u);
      } else if (r > 1.0) {
        outside.push_back(u);
      } else {
        inside.push_back(u);
      }
    }
  }

  // Leftover near-circle singles are numerically split double roots: pair them
  // by proximity and use the midpoint projected back to the circle.
  if (circle_singles.size() % 2 != 0)
    throw factorization_error("fejer_riesz: unpaired root on the circle");
  std::vector<bool> single_used(circle_singles.size(), false);
  for (size_t i = 0; i < circle_singles.size(); ++i) {
    if (single_used[i]) continue;
    single_used[i] = true;
    long mate_idx = -1;
    double best = 0.0;
    for (size_t j = i + 1; j < circle_singles.size(); ++j) {
      if (single_used[j]) continue;
      const double dist = std::abs(circle_singles[j] - circle_singles[i]);
      if (mate_idx < 0 || dist < best) {
        best = dist;
        mate_idx = static_cast<long>(j);
      }
    }
    if (mate_idx < 0 || best > 1e-5)
      throw factorization_error("fejer_riesz: circle roots too far apart to pair");
    single_used[static_cast<size_t>(mate_idx)] = true;
    cplx u = 0.5 * (circle_singles[i] + circle_singles[static_cast<size_t>(mate_idx)]);
    circle_mult.emplace_back(u / std::abs(u), 1);
  }

  // Every root strictly outside must be matched by its reflection 1/conj(w)
  // strictly inside.
  std::vector<bool> inside_used(inside.size(), false);
  for (const auto& w : outside) {
    const cplx target = 1.0 / std::conj(w);
    double best = 0.0;
    long best_idx = -1;
    for (size_t j = 0; j < inside.size(); ++j) {
      if (inside_used[j]) continue;
      const double dist = std::abs(inside[j] - target);
      if (best_idx < 0 || dist < best) {
        best = dist;
        best_idx = static_cast<long>(j);
      }
    }
    if (best_idx < 0 || best > opt.pairing_rel_tol * (1.0 + std::abs(target)))
      throw factorization_error("fejer_riesz: root pairing (w, 1/conj(w)) failed");
    inside_used[static_cast<size_t>(best_idx)] = true;
  }
  for (bool u : inside_used)
    if (!u) throw factorization_error("fejer_riesz: unmatched root inside the disc");

  std::vector<cplx> q_roots = outside;
  for (const auto& [u, m] : circle_mult)
    q_roots.insert(q_roots.end(), static_cast<size_t>(m), u);
  if (static_cast<int>(q_roots.size()) != n)
    throw factorization_error("fejer_riesz: factor degree mismatch after pairing");

  Poly q = poly_from_roots(q_roots);
  const cplx probe = std::polar(1.0, theta_star);
  const double qmod = std::abs(q(probe));
  if (qmod < 1e-300) throw factorization_error("fejer_riesz: degenerate scale probe");
  q = cplx(std::sqrt(t_max) / qmod) * q;
  const cplx q0 = q(cplx(0.0));
  if (std::abs(q0) > 0.0) q = (std::conj(q0) / std::abs(q0)) * q;

  double defect = 0.0;
  for (int j = 0; j < opt.grid; ++j) {
    const double theta = 2.0 * kPi * j / opt.grid;
    defect = std::max(defect, std::abs(std::norm(q(std::polar(1.0, theta))) - t(theta)));
  }
  if (defect > opt.verify_tol * std::max(1.0, t_max))
    throw factorization_error("fejer_riesz: |q|^2 deviates from t by " + std::to_string(defect));

  result.factor = q;
  result.circle_roots = std::move(circle_mult);
  result.factor_defect = defect;
  return result;
}

}  // namespace cyclab
