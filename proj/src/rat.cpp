#include "cyclab/rat.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclab/errors.hpp"
#include "cyclab/roots.hpp"

namespace cyclab {

cplx Rat::operator()(cplx z) const {
  if (den.is_zero()) throw std::invalid_argument("Rat: zero denominator polynomial");
  const cplx d = den(z);
  if (std::abs(d) < 1e-14 * std::max(1.0, den.coeff_l1())) throw pole_error("Rat: pole at evaluation point");
  return num(z) / d;
}

Rat Rat::derivative() const {
  return Rat{num.derivative() * den - num * den.derivative(), den * den};
}

bool holomorphic_on_closed_disc(const Rat& r) {
  if (r.den.is_zero()) return false;
  if (r.den.degree() == 0) return true;
  for (const auto& root : companion_roots(r.den)) {
    if (std::abs(root) <= 1.0 + 1e-9) return false;
  }
  return true;
}

std::vector<cplx> taylor(const Rat& r, int length) {
  if (length <= 0) return {};
  if (r.den.is_zero()) throw std::invalid_argument("taylor: zero denominator");
  const cplx d0 = r.den.coeff(0);
  if (std::abs(d0) < 1e-300) throw std::invalid_argument("taylor: denominator vanishes at 0");
  std::vector<cplx> c(static_cast<size_t>(length));
  for (int k = 0; k < length; ++k) {
    cplx acc = r.num.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= r.den.coeff(j) * c[static_cast<size_t>(k - j)];
    c[static_cast<size_t>(k)] = acc / d0;
  }
  return c;
}

std::vector<cplx> series_div(const Rat& b, const Rat& a, int length) {
  // b/a = (b.num * a.den) / (b.den * a.num)
  const Poly num = b.num * a.den;
  const Poly den = b.den * a.num;
  if (den.is_zero()) throw std::invalid_argument("series_div: a is the zero function");
  if (std::abs(a.num.coeff(0)) < 1e-300 * std::max(1.0, a.num.coeff_l1()))
    throw std::invalid_argument("series_div: a(0) = 0");
  return taylor(Rat{num, den}, length);
}

double sup_circle(const Poly& f, int grid_size, double r) {
  double m = 0.0;
  for (int j = 0; j < grid_size; ++j) {
    const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / grid_size);
    m = std::max(m, std::abs(f(z)));
  }
  return m;
}

double sup_circle(const Rat& f, int grid_size, double r) {
  const double den_scale = std::max(1.0, f.den.coeff_l1());
  double m = 0.0;
  for (int j = 0; j < grid_size; ++j) {
    const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / grid_size);
    const cplx d = f.den(z);
    if (std::abs(d) < 1e-12 * den_scale) throw pole_error("sup_circle: pole on sampled circle");
    m = std::max(m, std::abs(f.num(z) / d));
  }
  return m;
}

}  // namespace cyclab
