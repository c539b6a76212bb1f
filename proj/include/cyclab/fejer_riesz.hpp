#ifndef CYCLAB_FEJER_RIESZ_HPP
#define CYCLAB_FEJER_RIESZ_HPP

#include <utility>
#include <vector>

#include "cyclab/poly.hpp"

namespace cyclab {

struct FejerRieszOptions {
  int grid = 4096;              // circle grid for the nonnegativity and verify scans
  double negativity_tol = 1e-10;  // relative to max t
  double verify_tol = 1e-9;       // max | |q|^2 - t | allowed, relative to max(1, max t)
  double pairing_rel_tol = 1e-8;  // relative tolerance for (w, 1/conj(w)) matching
};

struct FejerRieszResult {
  Poly factor;  // q with |q|^2 = t on the circle, root-free in the open disc, q(0) >= 0
  std::vector<std::pair<cplx, int>> circle_roots;  // unimodular roots of q with multiplicities
  double factor_defect = 0.0;  // max over the grid of | |q|^2 - t |
};

/// Spectral factorisation of a trig polynomial t >= 0 on the circle:
/// returns q with |q(e^{i theta})|^2 = t(theta), no roots in the open disc
/// (circle roots carry half the multiplicity they have in t), and q(0) real
/// nonnegative. Works by root-finding on z^n t(z) and pairing (w, 1/conj(w)).
FejerRieszResult fejer_riesz(const TrigPoly& t, const FejerRieszOptions& opt = {});

}  // namespace cyclab

#endif
