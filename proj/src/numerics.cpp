#include "loglab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace loglab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvE = 0.36787944117144233;  // 1/e

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double lambert_residual(Complex w, Complex z) {
  return std::abs(w * std::exp(w) - z);
}

// Initial guesses for the Halley refinement, in order of preference for the
// requested branch. Real arguments on a real branch segment get real guesses
// so that the refined W stays exactly real.
std::vector<Complex> initial_guesses(Complex z, int k) {
  std::vector<Complex> guesses;
  const Complex q = z + kInvE;  // distance to the branch point

  if (k == 0) {
    if (std::abs(q) < 0.3) {
      // Branch-point series: W = -1 + p - p^2/3 + 11/72 p^3, p = sqrt(2(e z + 1)).
      const Complex p = std::sqrt(2.0 * (std::numbers::e * z + 1.0));
      guesses.push_back(-1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p);
    }
    if (std::abs(z) < 2.0) {
      guesses.push_back(std::log(1.0 + z));  // decent on the whole disk
    }
    if (std::abs(z) > 0.5) {
      const Complex l1 = std::log(z);
      guesses.push_back(l1 - std::log(l1));
    }
  } else if (k == -1 && z.imag() == 0.0 && z.real() < 0.0 && z.real() > -kInvE) {
    // Real branch segment of W_{-1}: keep the arithmetic real.
    const double x = z.real();
    if (q.real() < 0.09) {
      const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
      guesses.push_back(Complex(-1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p, 0.0));
    }
    const double l1 = std::log(-x);
    guesses.push_back(Complex(l1 - std::log(-l1), 0.0));
  } else {
    if (std::abs(k) == 1 && std::abs(q) < 0.3) {
      // Branch-point series continuation onto W_{+-1}.
      Complex p = std::sqrt(2.0 * (std::numbers::e * z + 1.0));
      if (k == 1) p = -p;
      guesses.push_back(-1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p);
    }
    const Complex l1 = std::log(z) + Complex(0.0, 2.0 * kPi * k);
    guesses.push_back(l1 - std::log(l1));
  }

  // Last-resort fallbacks shared by every branch.
  const Complex l1 = std::log(z) + Complex(0.0, 2.0 * kPi * k);
  guesses.push_back(l1);
  return guesses;
}

// Halley refinement of w*e^w = z. Returns the refined value, or nullopt-like
// failure via the residual check done by the caller.
Complex halley_refine(Complex w, Complex z) {
  constexpr int kMaxSteps = 100;
  for (int step = 0; step < kMaxSteps; ++step) {
    const Complex ew = std::exp(w);
    const Complex f = w * ew - z;
    if (f == 0.0) break;
    const Complex wp1 = w + 1.0;
    Complex denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !is_finite(denom)) denom = ew * wp1;
    const Complex dw = f / denom;
    if (!is_finite(dw)) break;
    w -= dw;
    if (std::abs(dw) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace

BaseSpec::BaseSpec(Complex base) : base_(base) {
  if (base == Complex(0.0, 0.0)) throw InvalidBase("base 0 has no logarithm");
  if (base == Complex(1.0, 0.0)) throw InvalidBase("base 1: log base value is 0");
  log_base_value_ = principal_log(base);
  if (log_base_value_ == Complex(0.0, 0.0)) {
    throw InvalidBase("log of base is 0");
  }
}

BaseSpec BaseSpec::natural() { return BaseSpec(Complex(std::numbers::e, 0.0)); }

Complex principal_log(Complex z) {
  if (z == Complex(0.0, 0.0)) throw UndefinedInput("log of zero");
  // Collapse a negative-zero imaginary part so negative reals land on the
  // +i*pi side of the cut.
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  return std::log(z);
}

Complex log_base(Complex z, const BaseSpec& b) {
  return principal_log(z) / b.log_base_value();
}

Complex lambert_w(Complex z, int k) {
  if (std::abs(k) > kMaxBranchIndex) {
    throw std::invalid_argument("branch index outside explored regime");
  }
  if (z == Complex(0.0, 0.0)) {
    if (k == 0) return Complex(0.0, 0.0);
    throw UndefinedInput("W_k(0) undefined for k != 0");
  }

  const double bound = 1e-12 * std::max(1.0, std::abs(z));
  Complex best{};
  double best_res = std::numeric_limits<double>::infinity();
  for (const Complex& guess : initial_guesses(z, k)) {
    if (!is_finite(guess)) continue;
    const Complex w = halley_refine(guess, z);
    if (!is_finite(w)) continue;
    const double res = lambert_residual(w, z);
    if (res < best_res) {
      best = w;
      best_res = res;
    }
    if (best_res <= bound) return best;
  }
  throw NonConvergence("Lambert W refinement failed near a branch point");
}

FixedPointResult fixed_point_analytic(const BaseSpec& b, int k) {
  const Complex lb = b.log_base_value();
  const Complex w = lambert_w(-lb, k);
  const Complex z = -w / lb;
  const double residual = std::abs(log_base(z, b) - z);
  return FixedPointResult{z, residual, residual <= 1e-10};
}

Complex multiplier(Complex z_star, const BaseSpec& b) {
  if (z_star == Complex(0.0, 0.0)) {
    throw UndefinedInput("multiplier undefined at z = 0");
  }
  return 1.0 / (z_star * b.log_base_value());
}

std::vector<AttractingFixedPoint> attracting_fixed_points(const BaseSpec& b) {
  std::vector<AttractingFixedPoint> out;
  for (int k = -3; k <= 3; ++k) {
    FixedPointResult fp;
    try {
      fp = fixed_point_analytic(b, k);
    } catch (const NonConvergence&) {
      continue;
    }
    if (!fp.on_principal_branch) continue;
    const double mult = std::abs(multiplier(fp.value, b));
    if (mult >= 1.0) continue;
    const double scale = std::max(1.0, std::abs(fp.value));
    const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& c) {
      return std::abs(c.value - fp.value) <= 1e-8 * scale;
    });
    if (!dup) out.push_back({k, fp.value, fp.residual, mult});
  }
  return out;
}

}  // namespace loglab
