#include "loglab/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace loglab {
namespace {

constexpr double kSlowMultiplierThreshold = 0.999;

const AttractingFixedPoint* nearest_candidate(
    const std::vector<AttractingFixedPoint>& cands, Complex ref) {
  const AttractingFixedPoint* best = nullptr;
  double best_d = 0.0;
  for (const auto& c : cands) {
    const double d = std::abs(c.value - ref);
    if (!best || d < best_d) {
      best = &c;
      best_d = d;
    }
  }
  return best;
}

// When the orbit gives no usable reference point, prefer the candidate whose
// imaginary sign matches the half-plane, then a real candidate, then anything.
const AttractingFixedPoint* half_plane_candidate(
    const std::vector<AttractingFixedPoint>& cands, HalfPlane hp) {
  const double sign = hp == HalfPlane::Upper ? 1.0 : -1.0;
  for (const auto& c : cands) {
    if (c.value.imag() * sign > 1e-12) return &c;
  }
  for (const auto& c : cands) {
    if (std::abs(c.value.imag()) <= 1e-12) return &c;
  }
  return cands.empty() ? nullptr : &cands.front();
}

double residual_of(Complex z, const BaseSpec& b) {
  if (z == Complex(0.0, 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    return std::numeric_limits<double>::infinity();
  }
  return std::abs(log_base(z, b) - z);
}

int thread_budget(size_t work_items) {
  int n = 0;
  if (const char* env = std::getenv("LOGLAB_THREADS")) {
    n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return std::min<int>(n, static_cast<int>(std::max<size_t>(work_items, 1)));
}

}  // namespace

Complex canonical_start(HalfPlane hp) {
  return hp == HalfPlane::Upper ? Complex(5.0, 1.0) : Complex(5.0, -1.0);
}

AttractorRecord attractor_for_base(const BaseSpec& b, HalfPlane hp,
                                   const IterationConfig& cfg) {
  const IterationTrace trace = iterate(canonical_start(hp), b, cfg);
  const auto cands = attracting_fixed_points(b);

  const bool converged = trace.outcome.kind == Outcome::Kind::Converged;
  const Complex last = trace.iterates.back();
  const bool last_usable = converged || trace.outcome.kind == Outcome::Kind::MaxItersReached;

  const AttractingFixedPoint* pick =
      last_usable ? nearest_candidate(cands, last) : half_plane_candidate(cands, hp);

  AttractorRecord rec{b, hp};
  rec.steps = static_cast<int>(trace.iterates.size());

  if (pick && pick->multiplier_abs > kSlowMultiplierThreshold) {
    // Any practical iteration cap under-converges here; report the oracle.
    rec.value = pick->value;
    rec.method = Method::Analytic;
    rec.status = RecordStatus::SlowNearBifurcation;
  } else if (converged && pick &&
             std::abs(trace.outcome.value - pick->value) <=
                 1e-9 * std::max(1.0, std::abs(pick->value))) {
    rec.value = pick->value;
    rec.method = Method::CrossChecked;
    rec.status = RecordStatus::Ok;
  } else if (converged) {
    rec.value = trace.outcome.value;
    rec.method = Method::Iterated;
    rec.status = residual_of(rec.value, b) <= 1e-10 ? RecordStatus::Ok
                                                    : RecordStatus::Failed;
  } else if (pick) {
    // Orbit did not settle (cycle or slow drift) but the map has an
    // attracting fixed point; report it as the analytic resolution.
    rec.value = pick->value;
    rec.method = Method::Analytic;
    rec.status = RecordStatus::Ok;
    rec.steps = 0;
  } else {
    // No fixed point reachable by either method; keep the terminal iterate so
    // sweeps still emit the observed curve.
    rec.value = last;
    rec.method = Method::Iterated;
    rec.status = RecordStatus::Failed;
  }

  rec.residual = residual_of(rec.value, b);
  try {
    rec.multiplier_abs = std::abs(multiplier(rec.value, b));
  } catch (const UndefinedInput&) {
    rec.multiplier_abs = std::numeric_limits<double>::infinity();
  }
  return rec;
}

SweepResult sweep_bases(Regime regime, const std::vector<Complex>& grid,
                        const IterationConfig& cfg) {
  // Real-axis regimes distinguish the half-planes (mirror or collapse checks
  // need both); imaginary/complex bases break the conjugate tie to the start,
  // so one canonical record per base suffices.
  const bool both_planes =
      regime == Regime::RealAbove1 || regime == Regime::UnitInterval ||
      regime == Regime::Negative;
  const size_t per_base = both_planes ? 2 : 1;

  SweepResult result{regime, {}};
  result.points.resize(grid.size() * per_base,
                       AttractorRecord{BaseSpec::natural(), HalfPlane::Upper});

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
      const BaseSpec b(grid[i]);
      result.points[per_base * i] = attractor_for_base(b, HalfPlane::Upper, cfg);
      if (both_planes) {
        result.points[per_base * i + 1] =
            attractor_for_base(b, HalfPlane::Lower, cfg);
      }
    }
  };

  const int threads = thread_budget(grid.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return result;
}

BifurcationPoint locate_bifurcation(double lo, double hi, const IterationConfig& cfg) {
  if (!(lo < hi)) throw std::invalid_argument("need lo < hi");

  auto upper_attractor = [&cfg](double b) {
    return attractor_for_base(BaseSpec(Complex(b, 0.0)), HalfPlane::Upper, cfg);
  };
  auto indicator = [&upper_attractor](double b) {
    return upper_attractor(b).value.imag() > 1e-6;
  };

  const bool at_lo = indicator(lo);
  if (at_lo == indicator(hi)) {
    throw NoBifurcationInInterval("indicator constant across [lo, hi]");
  }

  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (indicator(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double star = 0.5 * (lo + hi);
  return BifurcationPoint{star, upper_attractor(star).value};
}

std::vector<StabilityEntry> stability_audit(const SweepResult& sweep) {
  std::vector<StabilityEntry> out;
  for (const auto& rec : sweep.points) {
    if (rec.status == RecordStatus::Failed) continue;
    const bool attracting = rec.multiplier_abs < 1.0;
    out.push_back({rec.base.base(), rec.multiplier_abs, attracting,
                   rec.status == RecordStatus::Ok && !attracting});
  }
  return out;
}

std::string to_string(HalfPlane hp) {
  return hp == HalfPlane::Upper ? "upper" : "lower";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Iterated: return "iterated";
    case Method::Analytic: return "analytic";
    case Method::CrossChecked: return "cross-checked";
  }
  return "?";
}

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Ok: return "ok";
    case RecordStatus::SlowNearBifurcation: return "slow-near-bifurcation";
    case RecordStatus::Failed: return "failed";
  }
  return "?";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::RealAbove1: return "real";
    case Regime::UnitInterval: return "unit-interval";
    case Regime::Negative: return "negative";
    case Regime::Imaginary: return "imaginary";
    case Regime::ComplexGrid: return "complex-grid";
  }
  return "?";
}

}  // namespace loglab
