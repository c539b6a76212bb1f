#ifndef CYCLAB_MATE_HPP
#define CYCLAB_MATE_HPP

#include <utility>
#include <vector>

#include "cyclab/rat.hpp"

namespace cyclab {

/// A rational symbol b (non-inner, in the closed unit ball, holomorphic on the
/// closed disc) together with its pythagorean mate a: the outer rational
/// function with a(0) > 0 and |a|^2 + |b|^2 = 1 on the circle.
struct RationalMate {
  Rat b;
  Rat a;
  /// Circle zeros of a's numerator with multiplicities.
  std::vector<std::pair<cplx, int>> boundary_zeros;
  /// Total boundary multiplicity, N = sum of m_i.
  int N = 0;
  /// Truncated Taylor coefficients c_j of b/a at 0.
  std::vector<cplx> c;
  int truncation_length = 0;
  /// max over the verification grid of | |a|^2 + |b|^2 - 1 |.
  double roundtrip_residual = 0.0;
  /// Tolerance used when clustering boundary zeros (recorded metadata).
  double cluster_tol = 1e-6;
};

struct MateOptions {
  int grid = 4096;             // verification grid on the circle
  double ball_tol = 1e-9;      // sup |b| may exceed 1 by at most this
  double roundtrip_tol = 1e-9;   // gate on | |a|^2 + |b|^2 - 1 |
  double series_tol = 1e-9;      // gate on c * taylor(a) - taylor(b)
  int c_length = 256;          // default truncation for c
};

/// Compute the pythagorean mate of b. Throws not_in_ball_error when
/// sup |b| > 1 + tol, inner_function_error when 1 - |b|^2 vanishes identically
/// on the circle, pole_error when b has a pole in the closed disc.
RationalMate mate(const Rat& b, const MateOptions& opt = {});

/// c_0..c_upto of b/a, reusing the stored prefix when long enough and
/// recomputing otherwise (pure; the mate itself is immutable).
std::vector<cplx> mate_c_prefix(const RationalMate& m, int upto);

}  // namespace cyclab

#endif
