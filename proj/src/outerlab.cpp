#include "cyclab/outerlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cyclab/errors.hpp"
#include "cyclab/roots.hpp"

namespace cyclab {

namespace {

constexpr double kPi = std::numbers::pi;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Cluster roots and polish multiple clusters on the matching derivative, as
// companion eigenvalues of a k-fold root only carry eps^(1/k) accuracy.
std::vector<std::pair<cplx, int>> polished_root_clusters(const Poly& f, double cluster_tol) {
  std::vector<cplx> roots = companion_roots(f);
  std::vector<std::pair<cplx, int>> out;
  // Multiplicity-k eigenvalue clusters scatter like eps^(1/k); 1e-4 covers
  // multiplicities up to ~4 without merging genuinely distinct desk-scale roots.
  const double tol = std::max(cluster_tol, 1e-4);
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    cplx centroid = roots[i];
    std::vector<size_t> members{i};
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        if (std::abs(roots[j] - centroid) <= tol * (1.0 + std::abs(centroid))) {
          used[j] = true;
          members.push_back(j);
          centroid = cplx(0.0);
          for (size_t k : members) centroid += roots[k];
          centroid /= double(members.size());
          grew = true;
        }
      }
    }
    const int mult = static_cast<int>(members.size());
    cplx u = centroid;
    if (mult == 1) {
      u = newton_polish(f, u, 4);
    } else {
      Poly d = f;
      for (int k = 0; k + 1 < mult; ++k) d = d.derivative();
      const Poly dd = d.derivative();
      for (int it = 0; it < 30; ++it) {
        const cplx den = dd(u);
        if (std::abs(den) < 1e-300) break;
        const cplx step = d(u) / den;
        u -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(u))) break;
      }
      if (std::abs(u - centroid) > 0.1 * (1.0 + std::abs(centroid))) u = centroid;
    }
    out.emplace_back(u, mult);
  }
  return out;
}

}  // namespace

BoundaryModulus BoundaryModulus::from_function(const std::function<double(double)>& phi,
                                               int grid_size) {
  if (!power_of_two(grid_size)) throw std::invalid_argument("BoundaryModulus: grid size must be a power of two");
  BoundaryModulus m;
  m.grid_size = grid_size;
  m.log_phi.resize(static_cast<size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) {
    const double theta = 2.0 * kPi * (j + 0.5) / grid_size;
    const double v = phi(theta);
    if (!(v > 0.0) || !std::isfinite(std::log(v)))
      throw std::invalid_argument("BoundaryModulus: log phi must be finite at every node");
    m.log_phi[static_cast<size_t>(j)] = std::log(v);
  }
  return m;
}

BoundaryModulus BoundaryModulus::from_log_samples(std::vector<double> log_phi) {
  if (!power_of_two(static_cast<int>(log_phi.size())))
    throw std::invalid_argument("BoundaryModulus: sample count must be a power of two");
  for (double v : log_phi)
    if (!std::isfinite(v)) throw std::invalid_argument("BoundaryModulus: log phi must be finite");
  BoundaryModulus m;
  m.grid_size = static_cast<int>(log_phi.size());
  m.log_phi = std::move(log_phi);
  return m;
}

BoundaryModulus BoundaryModulus::from_poly_modulus(const Poly& f, int grid_size) {
  return from_function([&](double theta) { return std::abs(f(std::polar(1.0, theta))); }, grid_size);
}

BoundaryModulus BoundaryModulus::from_csv(const std::string& text) {
  std::vector<std::pair<double, double>> rows;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty() || line[0] == '#') continue;
    const size_t comma = line.find(',');
    if (comma == std::string::npos) continue;
    char* tail = nullptr;
    const double theta = std::strtod(line.c_str(), &tail);
    const double phi = std::strtod(line.c_str() + comma + 1, nullptr);
    if (tail == line.c_str()) continue;  // header row
    rows.emplace_back(theta, phi);
  }
  if (rows.empty()) throw std::invalid_argument("BoundaryModulus: no samples in CSV");
  std::sort(rows.begin(), rows.end());
  const int n = static_cast<int>(rows.size());
  const double spacing = 2.0 * kPi / n;
  for (int j = 0; j < n; ++j) {
    if (std::abs(rows[static_cast<size_t>(j)].first - spacing * (j + 0.5)) > 1e-5)
      throw std::invalid_argument("BoundaryModulus: CSV angles must be the uniform midpoint grid");
  }
  std::vector<double> log_phi(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double v = rows[static_cast<size_t>(j)].second;
    if (!(v > 0.0)) throw std::invalid_argument("BoundaryModulus: CSV modulus must be positive");
    log_phi[static_cast<size_t>(j)] = std::log(v);
  }
  return from_log_samples(std::move(log_phi));
}

OuterEval outer_from_modulus(const BoundaryModulus& m, cplx z) {
  if (m.grid_size <= 0) throw std::invalid_argument("outer_from_modulus: empty modulus");
  OuterEval out;
  out.accuracy_warning = std::abs(z) > 0.999;
  cplx herglotz(0.0);
  for (int j = 0; j < m.grid_size; ++j) {
    const cplx xi = std::polar(1.0, 2.0 * kPi * (j + 0.5) / m.grid_size);
    herglotz += (xi + z) / (xi - z) * m.log_phi[static_cast<size_t>(j)];
  }
  out.value = std::exp(herglotz / double(m.grid_size));
  return out;
}

bool is_outer(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_outer: zero polynomial");
  if (f.degree() == 0) return true;
  for (const auto& [root, mult] : polished_root_clusters(f, 1e-6)) {
    (void)mult;
    if (std::abs(root) < 1.0 - 1e-10) return false;
  }
  return true;
}

double outer_mean_value_gap(const Poly& f, int grid_size) {
  const double f0 = std::abs(f(cplx(0.0)));
  if (f0 == 0.0) return std::numeric_limits<double>::infinity();
  double avg = 0.0;
  for (int j = 0; j < grid_size; ++j) {
    const double v = std::abs(f(std::polar(1.0, 2.0 * kPi * (j + 0.5) / grid_size)));
    if (v == 0.0) return std::numeric_limits<double>::infinity();
    avg += std::log(v);
  }
  avg /= grid_size;
  return std::abs(std::log(f0) - avg);
}

std::vector<std::pair<cplx, int>> boundary_zeros(const Poly& f, double band, double cluster_tol) {
  if (f.is_zero()) throw std::invalid_argument("boundary_zeros: zero polynomial");
  std::vector<std::pair<cplx, int>> out;
  if (f.degree() == 0) return out;
  for (const auto& [root, mult] : polished_root_clusters(f, cluster_tol)) {
    if (std::abs(std::abs(root) - 1.0) <= band) out.emplace_back(root / std::abs(root), mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return std::arg(a.first) < std::arg(b.first); });
  return out;
}

std::vector<double> shapiro_shields_decay(const Poly& f, cplx zeta, std::vector<double> radii) {
  if (f.is_zero()) throw std::invalid_argument("shapiro_shields_decay: zero polynomial");
  if (std::abs(f(zeta)) > 1e-8 * std::max(1.0, f.coeff_l1()))
    throw std::invalid_argument("shapiro_shields_decay: zeta is not a zero of f");
  if (radii.empty()) {
    for (int k = 1; k <= 20; ++k) radii.push_back(1.0 - std::pow(2.0, -k));
  }
  // Deflate the zero at zeta: f = (z - zeta)^m h with h(zeta) != 0, so that
  // log |f(r zeta)| = m log|1-r| + log |h(r zeta)| evaluates without the
  // catastrophic cancellation of Horner at r -> 1.
  Poly h = f;
  int mult = 0;
  while (!h.is_zero()) {
    const auto [q, rem] = synth_div(h, zeta);
    if (std::abs(rem) > 1e-8 * std::max(1.0, h.coeff_l1())) break;
    h = q;
    ++mult;
  }
  std::vector<double> values;
  values.reserve(radii.size());
  for (double r : radii) {
    const double log_f = mult * std::log(std::abs(1.0 - r)) + std::log(std::abs(h(r * zeta)));
    values.push_back((1.0 - r) * log_f);
  }
  return values;
}

E0Report e0_membership(const Rat& b, cplx zeta) {
  E0Report report;
  report.zeta = zeta;
  const double den_scale = std::max(1.0, b.den.coeff_l1());
  if (std::abs(b.den(zeta)) < 1e-12 * den_scale) throw pole_error("e0_membership: pole at zeta");
  report.modulus_at_zeta = std::abs(b(zeta));
  report.member = std::abs(report.modulus_at_zeta - 1.0) <= 1e-9;
  report.derivative_modulus = std::abs(b.derivative()(zeta));
  return report;
}

}  // namespace cyclab
