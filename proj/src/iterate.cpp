#include "loglab/iterate.hpp"

#include <cmath>

namespace loglab {
namespace {

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

IterationTrace iterate(Complex start, const BaseSpec& b, const IterationConfig& cfg) {
  if (!cfg.valid()) throw std::invalid_argument("invalid IterationConfig");

  IterationTrace trace{start, b, {start}, {}};
  auto& it = trace.iterates;

  if (start == Complex(0.0, 0.0)) {
    trace.outcome = {Outcome::Kind::UndefinedHit, start, 1, 0.0};
    return trace;
  }

  while (static_cast<int>(it.size()) < cfg.max_iters) {
    const Complex z = it.back();
    const Complex next = log_base(z, b);
    it.push_back(next);
    const int step = static_cast<int>(it.size());

    if (next == Complex(0.0, 0.0)) {
      trace.outcome = {Outcome::Kind::UndefinedHit, next, step, 0.0};
      return trace;
    }
    if (!is_finite(next) || std::abs(next) > cfg.divergence_bound) {
      trace.outcome = {Outcome::Kind::Diverged, next, step, 0.0};
      return trace;
    }
    const double delta = std::abs(next - z);
    if (delta < cfg.tolerance) {
      trace.outcome = {Outcome::Kind::Converged, next, step, delta};
      return trace;
    }
  }

  const double last_delta =
      it.size() >= 2 ? std::abs(it.back() - it[it.size() - 2]) : 0.0;
  trace.outcome = {Outcome::Kind::MaxItersReached, it.back(),
                   static_cast<int>(it.size()), last_delta};
  return trace;
}

std::vector<std::pair<Complex, Outcome>> sweep_starts(
    const std::vector<Complex>& starts, const BaseSpec& b, const IterationConfig& cfg) {
  if (starts.empty()) throw std::invalid_argument("empty start list");
  std::vector<std::pair<Complex, Outcome>> out;
  out.reserve(starts.size());
  for (const Complex& s : starts) {
    out.emplace_back(s, iterate(s, b, cfg).outcome);
  }
  return out;
}

std::vector<std::pair<double, double>> error_ratios(
    const IterationTrace& trace, Complex z_star, double tolerance) {
  if (trace.outcome.kind != Outcome::Kind::Converged) {
    throw NotConverged("error_ratios needs a Converged trace");
  }
  const double floor = 100.0 * tolerance;
  std::vector<std::pair<double, double>> out;
  for (size_t n = 0; n + 1 < trace.iterates.size(); ++n) {
    const Complex e0 = trace.iterates[n] - z_star;
    const Complex e1 = trace.iterates[n + 1] - z_star;
    if (std::abs(e0) <= floor || e1 == Complex(0.0, 0.0)) continue;
    const Complex r = e1 / e0;
    out.emplace_back(std::abs(r), std::arg(r));
  }
  return out;
}

}  // namespace loglab
