#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "loglab/atlas.hpp"
#include "loglab/format.hpp"

using namespace loglab;

namespace {
const IterationConfig kDefaults{};

double comp_err(Complex a, Complex b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}
}  // namespace

TEST_CASE("attractor_for_base matches the published per-base values") {
  const auto r16 = attractor_for_base(BaseSpec({1.6, 0}), HalfPlane::Upper, kDefaults);
  CHECK(r16.method == Method::CrossChecked);
  CHECK(r16.status == RecordStatus::Ok);
  CHECK(comp_err(r16.value, {1.7792, 1.4699}) < 1e-3);

  const auto big = attractor_for_base(BaseSpec({1e6, 0}), HalfPlane::Upper, kDefaults);
  CHECK(big.status == RecordStatus::Ok);
  CHECK(comp_err(big.value, {-0.117, 0.1596}) < 1e-3);

  const auto imag = attractor_for_base(BaseSpec({0, 1}), HalfPlane::Upper, kDefaults);
  CHECK(imag.status == RecordStatus::Ok);
  CHECK(comp_err(imag.value, {-1.8617, -0.4108}) < 1e-3);
  // The upper orbit cycles for base 1i; the analytic oracle resolves it.
  CHECK(imag.method == Method::Analytic);
}

TEST_CASE("records certify their own residual and stability") {
  for (const Complex bz : {Complex(2, 0), Complex(0, 2), Complex(-0.5, 0)}) {
    const auto rec = attractor_for_base(BaseSpec(bz), HalfPlane::Upper, kDefaults);
    REQUIRE(rec.status == RecordStatus::Ok);
    CHECK(rec.residual <= 1e-10);
    CHECK(rec.multiplier_abs < 1.0);
  }
}

TEST_CASE("near the tangency the analytic value is reported and flagged") {
  const auto rec =
      attractor_for_base(BaseSpec({1.444668, 0}), HalfPlane::Upper, kDefaults);
  CHECK(rec.status == RecordStatus::SlowNearBifurcation);
  CHECK(rec.method == Method::Analytic);
  CHECK(rec.multiplier_abs > 0.999);
  CHECK(rec.residual <= 1e-10);
  CHECK(std::abs(rec.value - Complex(std::numbers::e, 0)) < 0.05);
}

TEST_CASE("unit-interval bases above e^-e have no fixed point: honest Failed") {
  const auto rec = attractor_for_base(BaseSpec({0.5, 0}), HalfPlane::Upper, kDefaults);
  CHECK(rec.status == RecordStatus::Failed);
  CHECK(rec.residual > 1e-10);  // the terminal iterate is not a fixed point
  CHECK(std::isfinite(rec.value.real()));

  // Below e^-e the real fixed point attracts again.
  const auto low = attractor_for_base(BaseSpec({0.05, 0}), HalfPlane::Upper, kDefaults);
  CHECK(low.status == RecordStatus::Ok);
  CHECK(std::abs(low.value.imag()) < 1e-9);
}

TEST_CASE("half-planes mirror for real bases") {
  const auto up = attractor_for_base(BaseSpec({10, 0}), HalfPlane::Upper, kDefaults);
  const auto lo = attractor_for_base(BaseSpec({10, 0}), HalfPlane::Lower, kDefaults);
  CHECK(std::abs(lo.value - std::conj(up.value)) < 1e-12);
}

TEST_CASE("sweep_bases: order, half-plane layout, negative-base collapse") {
  const auto grid = real_grid(-2.0, -0.1, 0.1);
  const auto sweep = sweep_bases(Regime::Negative, grid, kDefaults);
  REQUIRE(sweep.points.size() == grid.size() * 2);
  for (size_t i = 0; i < grid.size(); ++i) {
    const auto& up = sweep.points[2 * i];
    const auto& lo = sweep.points[2 * i + 1];
    CHECK(up.base.base() == grid[i]);
    CHECK(up.half_plane == HalfPlane::Upper);
    CHECK(lo.half_plane == HalfPlane::Lower);
    REQUIRE(up.status == RecordStatus::Ok);
    REQUIRE(lo.status == RecordStatus::Ok);
    CHECK(std::abs(up.value - lo.value) < 1e-9);
  }

  // Imaginary regime: one canonical record per base.
  const auto im_sweep =
      sweep_bases(Regime::Imaginary, *parse_grid_spec("1i:10i:1i"), kDefaults);
  CHECK(im_sweep.points.size() == 10);
}

TEST_CASE("real sweep has a single liftoff threshold in the imaginary part") {
  // Monotone regime boundary: no interleaving of real and complex attractors.
  const auto grid = real_grid(1.40, 1.49, 0.0005);
  const auto sweep = sweep_bases(Regime::RealAbove1, grid, kDefaults);
  double last_real_base = 0.0, first_complex_base = 10.0;
  for (const auto& rec : sweep.points) {
    if (rec.half_plane != HalfPlane::Upper) continue;
    if (rec.value.imag() < 1e-9) {
      last_real_base = std::max(last_real_base, rec.base.base().real());
    }
    if (rec.value.imag() > 1e-6) {
      first_complex_base = std::min(first_complex_base, rec.base.base().real());
    }
  }
  CHECK(last_real_base < first_complex_base);
  CHECK(last_real_base < 1.4446679);   // tangency sits between adjacent
  CHECK(first_complex_base > 1.4446679);  // grid points
  CHECK(first_complex_base - last_real_base < 0.00075);
}

TEST_CASE("locate_bifurcation finds the tangency at e^(1/e)") {
  const auto bp = locate_bifurcation(1.4, 1.5, kDefaults);
  CHECK(std::abs(bp.base_star - 1.4446679) < 1e-5);
  CHECK(std::abs(bp.attractor_at_star - Complex(2.71828, 0)) < 1e-3);

  const double mult = std::abs(
      multiplier(bp.attractor_at_star, BaseSpec({bp.base_star, 0})));
  CHECK(std::abs(mult - 1.0) < 1e-3);

  CHECK_THROWS_AS(locate_bifurcation(2.0, 3.0, kDefaults), NoBifurcationInInterval);
  CHECK_THROWS_AS(locate_bifurcation(1.5, 1.4, kDefaults), std::invalid_argument);
}

TEST_CASE("stability audit over a real sweep") {
  std::vector<Complex> grid{{1.01, 0}, {1.3795, 0}, {2.718281828459045, 0}, {10, 0}};
  const auto sweep = sweep_bases(Regime::RealAbove1, grid, kDefaults);
  const auto audit = stability_audit(sweep);
  REQUIRE(audit.size() == sweep.points.size());
  for (const auto& entry : audit) {
    CHECK(entry.attracting);
    CHECK(!entry.audit_failure);
  }
  CHECK(std::abs(audit[0].multiplier_abs - 0.154) < 1e-3);   // base 1.01
  CHECK(std::abs(audit[4].multiplier_abs - 0.7276) < 1e-3);  // base e, upper
}
