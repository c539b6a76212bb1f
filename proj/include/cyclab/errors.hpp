#ifndef CYCLAB_ERRORS_HPP
#define CYCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclab {

/// Base class for all computational failures raised by the library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation of a rational function at (or too close to) a pole.
struct pole_error : error {
  using error::error;
};

/// A symbol exceeds the closed unit ball of H-infinity.
struct not_in_ball_error : error {
  using error::error;
};

/// 1 - |b|^2 vanishes identically on the circle; no pythagorean mate exists.
struct inner_function_error : error {
  using error::error;
};

/// Trigonometric polynomial handed to the spectral factoriser dips below zero.
struct negativity_error : error {
  using error::error;
};

/// Root pairing or the final |q|^2 = t verification failed.
struct factorization_error : error {
  using error::error;
};

/// Gram system condition number above the solver cutoff.
struct singular_gram_error : error {
  using error::error;
};

/// |g| <= |f| violated on the sampling grid; message carries the witness.
struct domination_error : error {
  using error::error;
};

/// Inner products requested in a space that is not an inner-product space.
struct non_hilbert_error : error {
  using error::error;
};

/// Evaluation point coincides with an interior atom of the measure.
struct singularity_error : error {
  using error::error;
};

/// Iterative minimiser exhausted its iteration budget.
struct non_convergence_error : error {
  using error::error;
};

/// Experiment manifest failed schema validation; message names the field.
struct validation_error : error {
  using error::error;
};

/// Unknown experiment suite id.
struct unknown_suite_error : error {
  using error::error;
};

/// Sweep family produced too few usable instances.
struct family_degenerate_error : error {
  using error::error;
};

}  // namespace cyclab

#endif
