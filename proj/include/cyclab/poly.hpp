#ifndef CYCLAB_POLY_HPP
#define CYCLAB_POLY_HPP

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace cyclab {

using cplx = std::complex<double>;

/// Polynomial with complex coefficients, lowest degree first.
///
/// The zero polynomial is the empty coefficient sequence; otherwise the last
/// coefficient is nonzero (exact trailing zeros are trimmed on construction).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly one() { return Poly{cplx(1.0)}; }
  /// chi_n scaled: scale * z^n.
  static Poly monomial(int n, cplx scale = cplx(1.0));

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^k, zero beyond the stored range.
  cplx coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return cplx(0.0);
    return coeffs_[static_cast<size_t>(k)];
  }

  /// Horner evaluation.
  cplx operator()(cplx z) const;

  Poly derivative() const;

  /// Sum of coefficient moduli; bounds sup over the closed disc.
  double coeff_l1() const;
  /// Euclidean norm of the coefficient vector (the Hardy-space norm).
  double coeff_l2() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(cplx s, const Poly& a);
  Poly operator-() const;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

struct SynthDivResult {
  Poly quotient;
  cplx remainder;  // equals g(w)
};

/// Divide g by (z - w): g(z) = (z - w) * quotient(z) + remainder.
SynthDivResult synth_div(const Poly& g, cplx w);

/// Build a polynomial from its roots: scale * prod (z - root_i).
Poly poly_from_roots(const std::vector<cplx>& roots, cplx scale = cplx(1.0));

/// Laurent polynomial on the circle with Hermitian symmetry c[-k] = conj(c[k]),
/// hence real-valued on the circle. Index range is -order()..order().
class TrigPoly {
 public:
  TrigPoly() : coeffs_(1, cplx(0.0)) {}
  /// coeffs holds c_{-n}..c_n (size 2n+1). Hermitian symmetry is enforced by
  /// averaging c_k with conj(c_{-k}).
  explicit TrigPoly(std::vector<cplx> coeffs);

  static TrigPoly constant(double c);
  /// |p(e^{i theta})|^2 as a trig polynomial (coefficient autocorrelation).
  static TrigPoly abs_square(const Poly& p);

  int order() const { return (static_cast<int>(coeffs_.size()) - 1) / 2; }
  cplx coeff(int k) const {
    int n = order();
    if (k < -n || k > n) return cplx(0.0);
    return coeffs_[static_cast<size_t>(k + n)];
  }

  /// Value at e^{i theta}; real by Hermitian symmetry.
  double operator()(double theta) const;

  /// Drop outer coefficients below tol in modulus (Hermitian pairs together).
  TrigPoly trimmed(double tol = 1e-14) const;

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(double s, const TrigPoly& a);

 private:
  std::vector<cplx> coeffs_;  // index k + order
};

}  // namespace cyclab

#endif
