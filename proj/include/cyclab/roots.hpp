#ifndef CYCLAB_ROOTS_HPP
#define CYCLAB_ROOTS_HPP

#include <vector>

#include "cyclab/poly.hpp"

namespace cyclab {

/// All complex roots of p via the balanced companion-matrix eigenvalue method.
/// Degrees 1 and 2 use closed forms. Throws std::invalid_argument for the
/// zero polynomial; a nonzero constant has no roots.
std::vector<cplx> companion_roots(const Poly& p);

/// A few Newton steps on p from z0; returns z0 unchanged when p'(z) is tiny
/// (multiple-root neighbourhoods are handled by the caller).
cplx newton_polish(const Poly& p, cplx z0, int iters = 3);

}  // namespace cyclab

#endif
