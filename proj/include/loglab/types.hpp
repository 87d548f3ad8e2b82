#ifndef LOGLAB_TYPES_HPP_
#define LOGLAB_TYPES_HPP_

#include <complex>
#include <stdexcept>
#include <string>

namespace loglab {

using Complex = std::complex<double>;

// log of zero, or an operation applied outside its domain.
struct UndefinedInput : std::domain_error {
  using std::domain_error::domain_error;
};

// base 0 or 1 (log_base_value would be 0).
struct InvalidBase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// an iterative refinement hit its cap without meeting its residual bound.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// an operation that requires a converged trace got something else.
struct NotConverged : std::logic_error {
  using std::logic_error::logic_error;
};

struct NoBifurcationInInterval : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A logarithm base together with its cached principal log.
/// Valid for any complex number except 0 and 1.
class BaseSpec {
 public:
  explicit BaseSpec(Complex base);

  static BaseSpec natural();  // base e

  Complex base() const { return base_; }
  Complex log_base_value() const { return log_base_value_; }

 private:
  Complex base_;
  Complex log_base_value_;
};

// Lambert W branches outside this range are not part of the explored regime.
inline constexpr int kMaxBranchIndex = 8;

}  // namespace loglab

#endif  // LOGLAB_TYPES_HPP_
