#include "cyclab/mate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclab/errors.hpp"
#include "cyclab/fejer_riesz.hpp"

namespace cyclab {

RationalMate mate(const Rat& b, const MateOptions& opt) {
  if (b.den.is_zero()) throw std::invalid_argument("mate: zero denominator");
  if (!holomorphic_on_closed_disc(b)) throw pole_error("mate: b has a pole in the closed unit disc");

  const double sup_b = sup_circle(b, opt.grid);
  if (sup_b > 1.0 + opt.ball_tol)
    throw not_in_ball_error("mate: sup |b| on the circle is " + std::to_string(sup_b));

  // Inner <=> 1 - |b|^2 == 0 on the circle; the numeric proxy is the grid max.
  double max_gap = 0.0;
  for (int j = 0; j < opt.grid; ++j) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * j / opt.grid);
    max_gap = std::max(max_gap, 1.0 - std::norm(b(z)));
  }
  if (max_gap <= 1e-10) throw inner_function_error("mate: b is inner to working precision");

  // On the circle 1 - |b|^2 = (|den|^2 - |num|^2) / |den|^2; factor the
  // numerator trig polynomial and divide by den.
  const TrigPoly t = TrigPoly::abs_square(b.den) - TrigPoly::abs_square(b.num);
  FejerRieszOptions fr_opt;
  fr_opt.grid = opt.grid;
  const FejerRieszResult fr = fejer_riesz(t, fr_opt);

  Rat a{fr.factor, b.den};
  const cplx a0 = a(cplx(0.0));
  if (std::abs(a0) < 1e-300)
    throw factorization_error("mate: a(0) = 0, outer normalisation impossible");
  a.num = (std::conj(a0) / std::abs(a0)) * a.num;

  RationalMate m;
  m.b = b;
  m.a = a;
  m.boundary_zeros = fr.circle_roots;
  m.N = 0;
  for (const auto& [zeta, mult] : m.boundary_zeros) {
    (void)zeta;
    m.N += mult;
  }
  m.c = series_div(b, a, opt.c_length);
  m.truncation_length = opt.c_length;

  double resid = 0.0;
  for (int j = 0; j < opt.grid; ++j) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * j / opt.grid);
    resid = std::max(resid, std::abs(std::norm(a(z)) + std::norm(b(z)) - 1.0));
  }
  m.roundtrip_residual = resid;
  if (resid > opt.roundtrip_tol)
    throw factorization_error("mate: |a|^2 + |b|^2 - 1 residual " + std::to_string(resid));

  // c * taylor(a) must reproduce taylor(b) up to the truncation.
  const auto ta = taylor(a, opt.c_length);
  const auto tb = taylor(b, opt.c_length);
  double series_err = 0.0;
  for (int k = 0; k < opt.c_length; ++k) {
    cplx acc(0.0);
    for (int j = 0; j <= k; ++j) acc += m.c[static_cast<size_t>(j)] * ta[static_cast<size_t>(k - j)];
    series_err = std::max(series_err, std::abs(acc - tb[static_cast<size_t>(k)]));
  }
  if (series_err > opt.series_tol)
    throw factorization_error("mate: series consistency residual " + std::to_string(series_err));

  return m;
}

std::vector<cplx> mate_c_prefix(const RationalMate& m, int upto) {
  const int need = upto + 1;
  if (need <= static_cast<int>(m.c.size()))
    return {m.c.begin(), m.c.begin() + need};
  return series_div(m.b, m.a, need);
}

}  // namespace cyclab
