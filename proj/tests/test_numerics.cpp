#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "loglab/numerics.hpp"

using namespace loglab;

namespace {
constexpr double kPi = std::numbers::pi;

double comp_err(Complex a, Complex b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}
}  // namespace

TEST_CASE("principal log matches the published trace values") {
  CHECK(comp_err(principal_log({5, 0}), {1.6094, 0}) < 5e-5);
  CHECK(comp_err(principal_log({-0.74258, 0}), {-0.29763, 3.1416}) < 5e-5);
  CHECK(principal_log({1, 0}) == Complex(0, 0));
  CHECK_THROWS_AS(principal_log({0, 0}), UndefinedInput);
}

TEST_CASE("negative reals land on the +i*pi side of the cut") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(1e-6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double x = -mag(rng);
    CHECK(principal_log({x, 0.0}).imag() == kPi);
    CHECK(principal_log({x, -0.0}).imag() == kPi);  // -0 imag is still the cut
  }
}

TEST_CASE("conjugation equivariance off the negative real axis") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const BaseSpec b2({2, 0});
  for (int i = 0; i < 500; ++i) {
    const Complex z(u(rng), u(rng));
    if (z.imag() == 0.0 && z.real() <= 0.0) continue;
    CHECK(principal_log(std::conj(z)) == std::conj(principal_log(z)));
    CHECK(log_base(std::conj(z), b2) == std::conj(log_base(z, b2)));
  }
}

TEST_CASE("log_base basics") {
  const BaseSpec e = BaseSpec::natural();
  CHECK(comp_err(log_base({5, 0}, e), {1.6094, 0}) < 5e-5);
  CHECK(std::abs(log_base({8, 0}, BaseSpec({2, 0})) - Complex(3, 0)) < 1e-14);
  CHECK(std::abs(log_base({1.6, 0}, BaseSpec({1.6, 0})) - Complex(1, 0)) < 1e-15);
  CHECK_THROWS_AS(log_base({0, 0}, e), UndefinedInput);
}

TEST_CASE("BaseSpec rejects 0 and 1") {
  CHECK_THROWS_AS(BaseSpec({0, 0}), InvalidBase);
  CHECK_THROWS_AS(BaseSpec({1, 0}), InvalidBase);
  CHECK(BaseSpec::natural().log_base_value() == Complex(1, 0));
}

TEST_CASE("Lambert W known values") {
  CHECK(lambert_w({0, 0}, 0) == Complex(0, 0));
  CHECK(std::abs(lambert_w({std::numbers::e, 0}, 0) - Complex(1, 0)) < 1e-14);

  // W_{-1}(-1): brute-check the defining equation, then the tabulated digits.
  const Complex w = lambert_w({-1, 0}, -1);
  CHECK(std::abs(w * std::exp(w) + 1.0) < 1e-12);
  CHECK(comp_err(w, {-0.31813, -1.33724}) < 1e-5);
}

TEST_CASE("Lambert W branch bookkeeping errors") {
  CHECK_THROWS_AS(lambert_w({1, 1}, 9), std::invalid_argument);
  CHECK_THROWS_AS(lambert_w({0, 0}, 1), UndefinedInput);
}

TEST_CASE("Lambert W residual bound across branches") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 400; ++i) {
    Complex z(u(rng), u(rng));
    while (std::abs(z) > 10.0 || z == Complex(0, 0)) z = Complex(u(rng), u(rng));
    const int k = static_cast<int>(i % 5) - 2;
    const Complex w = lambert_w(z, k);
    CHECK(std::abs(w * std::exp(w) - z) <= 1e-12 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("exponential inverse property on the principal strip") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const BaseSpec b({3.5, 0});
  for (int i = 0; i < 300; ++i) {
    const Complex w(u(rng), u(rng));
    const Complex wl = w * b.log_base_value();
    if (wl.imag() <= -kPi || wl.imag() > kPi) continue;
    const Complex z = std::exp(wl);
    CHECK(std::abs(log_base(z, b) - w) < 1e-12 * std::max(1.0, std::abs(w)));
  }
}

TEST_CASE("analytic fixed points reproduce the attractor table") {
  const auto fp_e = fixed_point_analytic(BaseSpec::natural(), 0);
  CHECK(fp_e.on_principal_branch);
  CHECK(comp_err(fp_e.value, {0.3181, 1.3372}) < 1e-4);

  const auto fp_10 = fixed_point_analytic(BaseSpec({10, 0}), 0);
  CHECK(fp_10.on_principal_branch);
  CHECK(comp_err(fp_10.value, {-0.1192, 0.7506}) < 1e-4);

  const auto fp_11 = fixed_point_analytic(BaseSpec({1.1, 0}), -1);
  CHECK(fp_11.on_principal_branch);
  CHECK(std::abs(fp_11.value - Complex(38.23, 0)) < 5e-3);
}

TEST_CASE("off-principal fixed points are flagged, not returned as attractors") {
  // For b = 0.5 the k = 1 solution solves z = log of z only on another branch.
  const auto fp = fixed_point_analytic(BaseSpec({0.5, 0}), 1);
  CHECK(!fp.on_principal_branch);
  CHECK(fp.residual > 1e-10);
}

TEST_CASE("fixed-point residual bound over a spread of bases") {
  const Complex bases[] = {{2, 0}, {10, 0}, {1.2, 0}, {-1, 0}, {0, 3}, {1e6, 0}};
  for (const Complex& bz : bases) {
    const BaseSpec b(bz);
    for (const auto& c : attracting_fixed_points(b)) {
      CHECK(c.residual <= 1e-10);
      CHECK(c.multiplier_abs < 1.0);
      CHECK(std::abs(log_base(c.value, b) - c.value) <= 1e-10);
    }
  }
}

TEST_CASE("multiplier formula") {
  const BaseSpec e = BaseSpec::natural();
  const Complex lam = multiplier({0.3181, 1.3372}, e);
  CHECK(comp_err(lam, {0.1684, -0.7078}) < 1e-4);
  CHECK(std::abs(std::abs(lam) - 0.7276) < 1e-4);

  // Neutral case at the tangency base e^(1/e).
  const BaseSpec tangency({std::exp(1.0 / std::numbers::e), 0});
  CHECK(std::abs(std::abs(multiplier({std::numbers::e, 0}, tangency)) - 1.0) < 1e-12);

  const Complex lam_small = multiplier({651.1, 0}, BaseSpec({1.01, 0}));
  CHECK(std::abs(lam_small.real() - 0.1544) < 1e-3);
  CHECK(lam_small.imag() == 0.0);

  CHECK_THROWS_AS(multiplier({0, 0}, e), UndefinedInput);
}

TEST_CASE("base e has exactly the conjugate pair of attracting fixed points") {
  const auto cands = attracting_fixed_points(BaseSpec::natural());
  REQUIRE(cands.size() == 2);
  CHECK(std::abs(cands[0].value - std::conj(cands[1].value)) < 1e-12);
}
