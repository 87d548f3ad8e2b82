#ifndef LOGLAB_ITERATE_HPP_
#define LOGLAB_ITERATE_HPP_

#include <utility>
#include <vector>

#include "loglab/numerics.hpp"
#include "loglab/types.hpp"

namespace loglab {

struct IterationConfig {
  double tolerance = 1e-12;        // absolute successive-difference threshold
  int max_iters = 10000;           // cap on recorded iterates (iterate 1 = start)
  double divergence_bound = 1e150; // modulus ceiling

  bool valid() const {
    return tolerance > 0.0 && max_iters >= 1 && divergence_bound > 1.0;
  }
};

struct Outcome {
  enum class Kind { Converged, MaxItersReached, Diverged, UndefinedHit };

  Kind kind = Kind::MaxItersReached;
  Complex value{};   // Converged: the fixed point; MaxItersReached: last iterate
  int steps = 0;     // index of the terminal iterate (1-based, as in the trace)
  double last_delta = 0.0;
};

/// Orbit of z -> log_b(z). iterates[0] is the start and carries index 1,
/// matching the 1-based indexing of the tabulated traces.
struct IterationTrace {
  Complex start;
  BaseSpec base;
  std::vector<Complex> iterates;
  Outcome outcome;
};

/// Runs the iteration until the first of: successive difference < tolerance
/// (Converged), modulus above divergence_bound or non-finite (Diverged),
/// an exact 0 (UndefinedHit, recorded, not thrown), or the iterate cap.
IterationTrace iterate(Complex start, const BaseSpec& b, const IterationConfig& cfg);

/// One outcome per start, input order preserved.
std::vector<std::pair<Complex, Outcome>> sweep_starts(
    const std::vector<Complex>& starts, const BaseSpec& b, const IterationConfig& cfg);

/// Successive error ratios |e_{n+1}|/|e_n| and rotations arg(e_{n+1}/e_n)
/// toward the attractor z_star, restricted to steps with
/// |e_n| > 100 * tolerance where roundoff does not yet dominate.
/// Throws NotConverged unless the trace outcome is Converged.
std::vector<std::pair<double, double>> error_ratios(
    const IterationTrace& trace, Complex z_star, double tolerance = 1e-12);

}  // namespace loglab

#endif  // LOGLAB_ITERATE_HPP_
