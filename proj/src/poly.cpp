#include "cyclab/poly.hpp"

#include <algorithm>
#include <cmath>

namespace cyclab {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

Poly Poly::monomial(int n, cplx scale) {
  if (scale == cplx(0.0)) return Poly{};
  std::vector<cplx> c(static_cast<size_t>(n) + 1, cplx(0.0));
  c.back() = scale;
  return Poly(std::move(c));
}

cplx Poly::operator()(cplx z) const {
  cplx acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = double(k) * coeffs_[k];
  return Poly(std::move(d));
}

double Poly::coeff_l1() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

double Poly::coeff_l2() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx(0.0));
  for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx(0.0));
  for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly operator*(cplx s, const Poly& a) {
  std::vector<cplx> c(a.coeffs_);
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

Poly Poly::operator-() const { return cplx(-1.0) * (*this); }

SynthDivResult synth_div(const Poly& g, cplx w) {
  const auto& c = g.coeffs();
  if (c.size() <= 1) return {Poly{}, g.is_zero() ? cplx(0.0) : c[0]};
  std::vector<cplx> q(c.size() - 1);
  cplx acc = c.back();
  for (size_t k = c.size() - 1; k-- > 0;) {
    q[k] = acc;
    acc = c[k] + w * acc;
  }
  return {Poly(std::move(q)), acc};
}

Poly poly_from_roots(const std::vector<cplx>& roots, cplx scale) {
  Poly p{scale};
  for (const auto& r : roots) p = p * Poly{-r, cplx(1.0)};
  return p;
}

TrigPoly::TrigPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0) coeffs_.resize(coeffs_.size() + 1, cplx(0.0));
  int n = order();
  for (int k = 0; k <= n; ++k) {
    cplx avg = 0.5 * (coeffs_[static_cast<size_t>(n + k)] + std::conj(coeffs_[static_cast<size_t>(n - k)]));
    coeffs_[static_cast<size_t>(n + k)] = avg;
    coeffs_[static_cast<size_t>(n - k)] = std::conj(avg);
  }
}

TrigPoly TrigPoly::constant(double c) { return TrigPoly({cplx(c)}); }

TrigPoly TrigPoly::abs_square(const Poly& p) {
  const auto& a = p.coeffs();
  int d = p.degree();
  if (d < 0) return TrigPoly::constant(0.0);
  std::vector<cplx> t(static_cast<size_t>(2 * d + 1), cplx(0.0));
  for (int k = -d; k <= d; ++k) {
    cplx s(0.0);
    for (int j = std::max(0, -k); j + std::max(0, k) <= d; ++j) s += a[static_cast<size_t>(j + k)] * std::conj(a[static_cast<size_t>(j)]);
    t[static_cast<size_t>(k + d)] = s;
  }
  return TrigPoly(std::move(t));
}

double TrigPoly::operator()(double theta) const {
  int n = order();
  double v = coeffs_[static_cast<size_t>(n)].real();
  cplx z = std::polar(1.0, theta);
  cplx zk(1.0);
  for (int k = 1; k <= n; ++k) {
    zk *= z;
    v += 2.0 * (coeffs_[static_cast<size_t>(n + k)] * zk).real();
  }
  return v;
}

TrigPoly TrigPoly::trimmed(double tol) const {
  int n = order();
  int m = 0;
  for (int k = n; k >= 1; --k) {
    if (std::abs(coeff(k)) > tol) {
      m = k;
      break;
    }
  }
  std::vector<cplx> c(static_cast<size_t>(2 * m + 1));
  for (int k = -m; k <= m; ++k) c[static_cast<size_t>(k + m)] = coeff(k);
  return TrigPoly(std::move(c));
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  int n = std::max(a.order(), b.order());
  std::vector<cplx> c(static_cast<size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) c[static_cast<size_t>(k + n)] = a.coeff(k) + b.coeff(k);
  return TrigPoly(std::move(c));
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  int n = std::max(a.order(), b.order());
  std::vector<cplx> c(static_cast<size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) c[static_cast<size_t>(k + n)] = a.coeff(k) - b.coeff(k);
  return TrigPoly(std::move(c));
}

TrigPoly operator*(double s, const TrigPoly& a) {
  std::vector<cplx> c(a.coeffs_);
  for (auto& x : c) x *= s;
  return TrigPoly(std::move(c));
}

}  // namespace cyclab
