#ifndef LOGLAB_NUMERICS_HPP_
#define LOGLAB_NUMERICS_HPP_

#include <vector>

#include "loglab/types.hpp"

namespace loglab {

/// Principal complex logarithm, Arg in (-pi, pi]. Negative reals map to
/// ln|x| + i*pi regardless of the sign of a zero imaginary part.
/// Throws UndefinedInput for z = 0.
Complex principal_log(Complex z);

/// Base-b logarithm: principal_log(z) / principal_log(b).
Complex log_base(Complex z, const BaseSpec& b);

/// Branch-k Lambert W: returns w with w*exp(w) = z and
/// |w*exp(w) - z| <= 1e-12 * max(1, |z|).
/// Asymptotic-log initial guess (log z + 2*pi*i*k, corrected), series guesses
/// near 0 and near the branch point -1/e, refined by Halley iteration.
/// Throws NonConvergence if refinement fails, UndefinedInput for z = 0 with
/// k != 0, std::invalid_argument for |k| > kMaxBranchIndex.
Complex lambert_w(Complex z, int k = 0);

/// Fixed point of z -> log_b(z) obtained from branch k of W:
/// z* = -W_k(-Log b) / Log b. The candidate always satisfies z* = log of z*
/// on *some* branch; on_principal_branch reports whether it is a fixed point
/// of the implemented (principal) map.
struct FixedPointResult {
  Complex value;
  double residual;            // |log_base(value, b) - value|
  bool on_principal_branch;   // residual <= 1e-10
};

FixedPointResult fixed_point_analytic(const BaseSpec& b, int k);

/// Local linearization of z -> log_b(z) at a fixed point:
/// lambda = 1 / (z_star * Log b). |lambda| < 1 means attracting; arg lambda
/// is the per-step rotation of the spiral approach.
Complex multiplier(Complex z_star, const BaseSpec& b);

/// All attracting fixed points of the principal map found by enumerating
/// W branches k in [-3, 3]: residual <= 1e-10 and |multiplier| < 1,
/// deduplicated. Ordered by branch index.
struct AttractingFixedPoint {
  int branch;
  Complex value;
  double residual;
  double multiplier_abs;
};

std::vector<AttractingFixedPoint> attracting_fixed_points(const BaseSpec& b);

}  // namespace loglab

#endif  // LOGLAB_NUMERICS_HPP_
