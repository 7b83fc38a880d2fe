#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "seeley/smoothstep.hpp"

using seeley::make_step;
using seeley::SmoothStep;

namespace {

// Plain central difference on step values, independent of the Taylor-mode
// path under test.
double fd1(const SmoothStep& s, double t, double h) {
  return (seeley::eval(s, t + h) - seeley::eval(s, t - h)) / (2 * h);
}

double fd2(const SmoothStep& s, double t, double h) {
  return (seeley::eval(s, t + h) - 2 * seeley::eval(s, t) + seeley::eval(s, t - h)) / (h * h);
}

}  // namespace

TEST_CASE("construction validates the interval") {
  CHECK_THROWS_AS((void)make_step(-0.5, -1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)make_step(0.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW((void)make_step(-1.0, -0.5));
}

TEST_CASE("clamped regions are exact") {
  auto s = make_step(-1.0, -0.5);
  CHECK(seeley::eval(s, -1.0) == 0.0);
  CHECK(seeley::eval(s, -3.7) == 0.0);
  CHECK(seeley::eval(s, -0.5) == 1.0);
  CHECK(seeley::eval(s, 2.0) == 1.0);

  auto low = seeley::eval_jet(s, -2.0, 2);
  REQUIRE(low.size() == 3);
  for (double v : low) CHECK(v == 0.0);

  auto high = seeley::eval_jet(s, -0.25, 3);
  REQUIRE(high.size() == 4);
  CHECK(high[0] == 1.0);
  CHECK(high[1] == 0.0);
  CHECK(high[2] == 0.0);
  CHECK(high[3] == 0.0);
}

TEST_CASE("midpoint value is one half by symmetry") {
  auto s = make_step(-1.0, -0.5);
  CHECK(seeley::eval(s, -0.75) == 0.5);
}

TEST_CASE("value range and monotonicity") {
  auto s = make_step(-1.0, -0.5);
  double prev = -1.0;
  for (int i = 0; i <= 2000; ++i) {
    double t = -1.2 + 0.9 * i / 2000.0;
    double v = seeley::eval(s, t);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("first derivative matches central differences across the window") {
  auto s = make_step(-1.0, -0.5);
  for (int i = 0; i <= 300; ++i) {
    double t = -2.0 + 2.5 * i / 300.0;
    auto jet = seeley::eval_jet(s, t, 1);
    double ref = fd1(s, t, 1e-6);
    CAPTURE(t);
    CHECK(std::abs(jet[1] - ref) < 1e-7);
  }
}

TEST_CASE("second derivative matches central differences") {
  auto s = make_step(-1.0, -0.5);
  for (int i = 1; i < 40; ++i) {
    double t = -1.0 + 0.5 * i / 40.0;
    auto jet = seeley::eval_jet(s, t, 2);
    double ref = fd2(s, t, 1e-5);
    CAPTURE(t);
    CHECK(std::abs(jet[2] - ref) < 1e-4 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("derivatives degrade to exact flats near the window edges") {
  auto s = make_step(-1.0, -0.5);
  // So close to the edge that exp(-1/u) underflows: the jet must collapse
  // to the adjacent flat, not produce NaN.
  auto near_lo = seeley::eval_jet(s, -1.0 + 1e-9, 4);
  CHECK(near_lo[0] == 0.0);
  for (size_t i = 1; i < near_lo.size(); ++i) CHECK(near_lo[i] == 0.0);
  auto near_hi = seeley::eval_jet(s, -0.5 - 1e-9, 4);
  CHECK(near_hi[0] == 1.0);
  for (size_t i = 1; i < near_hi.size(); ++i) CHECK(near_hi[i] == 0.0);
}

TEST_CASE("sup constants") {
  auto s = make_step(-1.0, -0.5);

  auto m0 = seeley::sup_constants(s, 0);
  CHECK(m0.order_p == 0);
  CHECK(m0.M_p == 1.0);
  CHECK(m0.grid_points >= 10000);
  CHECK(m0.grid_step > 0.0);

  auto m1 = seeley::sup_constants(s, 1);
  auto m2 = seeley::sup_constants(s, 2);
  CHECK(m1.M_p >= m0.M_p);
  CHECK(m2.M_p >= m1.M_p);
  CHECK(m2.M_p >= 1.0);

  // Independent dense sampling of |rho''| via plain value differences.
  double brute = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    double t = -1.0 + 1.0 * i / 200000.0;
    brute = std::max(brute, std::abs(fd2(s, t, 1e-5)));
    brute = std::max(brute, std::abs(fd1(s, t, 1e-6)));
  }
  brute = std::max(brute, 1.0);
  CHECK(m2.M_p == doctest::Approx(brute).epsilon(0.01));
}

TEST_CASE("higher order jets stay finite and flat outside") {
  auto s = make_step(-1.0, -0.5);
  auto j8 = seeley::eval_jet(s, -0.8, 8);
  REQUIRE(j8.size() == 9);
  for (double v : j8) CHECK(std::isfinite(v));
  CHECK_THROWS_AS((void)seeley::eval_jet(s, -0.8, -1), std::invalid_argument);
}
