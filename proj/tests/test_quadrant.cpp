#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "seeley/quadrant.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "seeley/halfline.hpp"
#include "seeley/testfunctions.hpp"
#include "seeley/verify.hpp"

using seeley::AxisConfig;
using seeley::CornerJetFunction;
using seeley::Point;
using seeley::QuadrantConfig;
using seeley::Tangent;
using seeley::TangentTuple;
using seeley::Vec;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

QuadrantConfig square_config(int k) {
  AxisConfig ax;
  ax.a = -kInf;
  ax.tau = -1.0;
  ax.upsilon = -0.5;
  ax.b = 0.0;
  QuadrantConfig cfg;
  cfg.axes = {ax, ax};
  cfg.k = k;
  return cfg;
}

std::vector<Vec> axis_dirs(int dim, const std::vector<int>& picks) {
  std::vector<Vec> dirs;
  for (int p : picks) {
    Vec d = Vec::Zero(dim);
    d[p] = 1.0;
    dirs.push_back(d);
  }
  return dirs;
}

Vec rvec(std::mt19937_64& rng, int dim, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = u(rng);
  return v;
}

}  // namespace

TEST_CASE("configuration and arity are validated") {
  auto f = seeley::corner_source(seeley::tf_product_uv(), 2, 3);
  CHECK(f.corner_dim == 2);
  CHECK(f.space_dim == 0);

  QuadrantConfig bad = square_config(3);
  bad.axes.pop_back();
  CHECK_THROWS_AS(seeley::extend_quadrant(f, bad), std::invalid_argument);

  QuadrantConfig empty;
  empty.k = 3;
  CHECK_THROWS_AS(
      seeley::extend_quadrant(seeley::corner_source(seeley::tf_exp_t(), 1, 3),
                              empty),
      std::invalid_argument);

  QuadrantConfig wrong = square_config(3);
  wrong.axes[1].tau = 0.5;
  CHECK_THROWS_AS(seeley::extend_quadrant(f, wrong), std::invalid_argument);

  // Operator order beyond the source's jets is refused.
  auto weak = seeley::corner_source(seeley::tf_product_uv(), 2, 1);
  CHECK_THROWS_AS(seeley::extend_quadrant(weak, square_config(3)),
                  std::invalid_argument);
}

TEST_CASE("one axis reduces bitwise to the half-line operator") {
  auto g = seeley::tf_exp_cos();
  auto corner = seeley::corner_source(g, 1, 3);
  QuadrantConfig qcfg;
  qcfg.axes = {AxisConfig{}};
  qcfg.axes[0].tau = -1.0;
  qcfg.axes[0].upsilon = -0.5;
  qcfg.k = 3;
  auto Q = seeley::extend_quadrant(corner, qcfg);

  seeley::OperatorConfig cfg;
  cfg.a = -kInf;
  cfg.tau = -1.0;
  cfg.upsilon = -0.5;
  cfg.b = 0.0;
  cfg.k = 3;
  auto F = seeley::extend(seeley::halfline_source(g, -kInf, 0.0, 3), cfg);

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    std::uniform_real_distribution<double> ut(-0.8, 2.2);
    double t = ut(rng);
    Vec x = rvec(rng, 1, -1.0, 1.0);
    Vec y(2);
    y << t, x[0];

    CHECK(Q.value(y)[0] == F.value(t, x)[0]);

    Vec d(2);
    d << 0.7, -0.4;
    TangentTuple w = {Tangent{0.7, Vec::Constant(1, -0.4)}};
    CHECK(Q.jet(1, y, {d})[0] == F.jet(1, Point{t, x}, w)[0]);
  }
}

TEST_CASE("jets inside the closed corner delegate bitwise") {
  auto f = seeley::corner_source(seeley::tf_sin_sum(2), 2, 3);
  auto Q = seeley::extend_quadrant(f, square_config(3));
  CHECK(Q.corner_dim() == 2);
  CHECK(Q.order() == 3);

  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 60; ++rep) {
    Vec y = rvec(rng, 2, -0.9, 0.0);
    if (rep == 0) y << 0.0, 0.0;
    if (rep == 1) y << -0.3, 0.0;
    int ell = rep % 4;
    std::vector<Vec> dirs;
    for (int i = 0; i < ell; ++i) dirs.push_back(rvec(rng, 2, -1.0, 1.0));
    Vec got = Q.jet(ell, y, dirs);
    Vec want = f.jet(ell, y, dirs);
    CHECK(got[0] == want[0]);
  }
}

TEST_CASE("values vanish identically past any axis margin") {
  auto f = seeley::corner_source(seeley::tf_sin_sum(2), 2, 3);
  auto Q = seeley::extend_quadrant(f, square_config(3));
  CHECK(Q.vanish_from(0) == 1.0);
  CHECK(Q.vanish_from(1) == 1.0);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> beyond(1.0, 4.0);
  std::uniform_real_distribution<double> anywhere(-0.9, 3.5);
  for (int axis = 0; axis < 2; ++axis) {
    for (int rep = 0; rep < 1000; ++rep) {
      Vec y(2);
      y[axis] = beyond(rng);
      y[1 - axis] = anywhere(rng);
      CHECK(Q.value(y)[0] == 0.0);
    }
  }
  // Jets vanish too, including mixed directions.
  Vec y(2);
  y << 1.25, 0.1;
  for (int ell = 1; ell <= 3; ++ell) {
    std::vector<Vec> dirs;
    for (int i = 0; i < ell; ++i) dirs.push_back(rvec(rng, 2, -1.0, 1.0));
    CHECK(Q.jet(ell, y, dirs)[0] == 0.0);
  }
}

TEST_CASE("polynomials are reproduced across the corner") {
  auto f = seeley::corner_source(seeley::tf_product_uv(), 2, 3);
  auto Q = seeley::extend_quadrant(f, square_config(3));

  // Inside the per-axis reproduction window the dyadic sums rebuild u*v.
  for (double u : {0.002, 0.01, 0.03}) {
    for (double v : {0.004, 0.02, 0.0625 / 2}) {
      Vec y(2);
      y << u, v;
      double got = Q.value(y)[0];
      CHECK(std::abs(got - u * v) <= 1e-10 * std::abs(u * v) + 1e-18);
    }
  }

  // Gradient of u + v at a small positive corner point is (1, 1).
  auto lin = seeley::corner_source(seeley::tf_linear_sum(2), 2, 3);
  auto L = seeley::extend_quadrant(lin, square_config(3));
  Vec p(2);
  p << 0.01, 0.01;
  auto grad = axis_dirs(2, {0, 1});
  CHECK(std::abs(L.jet(1, p, {grad[0]})[0] - 1.0) < 1e-10);
  CHECK(std::abs(L.jet(1, p, {grad[1]})[0] - 1.0) < 1e-10);
}

TEST_CASE("axis order does not matter for symmetric data") {
  // For f(u,v) = f(v,u) and identical axis frames, folding the axes in the
  // opposite order is the same as querying the transposed point.
  auto f = seeley::corner_source(seeley::tf_sin_sum(2), 2, 3);
  auto Q = seeley::extend_quadrant(f, square_config(3));

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-0.5, 1.4);
  for (int rep = 0; rep < 120; ++rep) {
    Vec y(2);
    y << u(rng), u(rng);
    Vec yt(2);
    yt << y[1], y[0];
    double a = Q.value(y)[0];
    double b = Q.value(yt)[0];
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("finite axis intervals do not disturb queries past the corner") {
  auto f = seeley::corner_source(seeley::tf_sin_sum(2), 2, 3);

  AxisConfig fin;
  fin.a = -1.0;
  fin.kappa = -0.9;
  fin.kappa_prime = -0.8;
  fin.tau = -0.6;
  fin.upsilon = -0.3;
  fin.b = 0.0;

  AxisConfig inf_ax;
  inf_ax.a = -kInf;
  inf_ax.tau = -0.6;
  inf_ax.upsilon = -0.3;
  inf_ax.b = 0.0;

  QuadrantConfig fin_cfg;
  fin_cfg.axes = {fin, fin};
  fin_cfg.k = 3;
  QuadrantConfig inf_cfg;
  inf_cfg.axes = {inf_ax, inf_ax};
  inf_cfg.k = 3;

  auto Qf = seeley::extend_quadrant(f, fin_cfg);
  auto Qi = seeley::extend_quadrant(f, inf_cfg);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pos(1e-4, 1.1);
  for (int rep = 0; rep < 50; ++rep) {
    Vec y(2);
    y << pos(rng), pos(rng);
    CHECK(Qf.value(y)[0] == Qi.value(y)[0]);
    Vec d = rvec(rng, 2, -1.0, 1.0);
    CHECK(Qf.jet(1, y, {d})[0] == Qi.jet(1, y, {d})[0]);
  }

  // Queries at or below a leave the domain.
  Vec deep(2);
  deep << -1.05, -0.5;
  CHECK_THROWS_AS(Qf.value(deep), std::domain_error);
}

TEST_CASE("mixed jets agree with finite differences") {
  auto f = seeley::corner_source(seeley::tf_sin_sum(2), 2, 3);
  auto Q = seeley::extend_quadrant(f, square_config(3));

  Vec d0 = Vec::Zero(2);
  d0[0] = 1.0;
  Vec d1 = Vec::Zero(2);
  d1[1] = 1.0;
  Vec mixed(2);
  mixed << 0.6, -0.8;

  for (Vec y : {Vec(Vec::Constant(2, 0.35)), Vec((Vec(2) << 0.2, 0.7).finished())}) {
    auto val = [&](const Point& p) {
      Vec z(2);
      z << p.t, p.x[0];
      return Q.value(z)[0];
    };
    // Treat coordinate 0 as the probe axis and coordinate 1 as space.
    Point at{y[0], Vec::Constant(1, y[1])};
    auto fd1 = seeley::fd_jet(val, at, {Tangent{1.0, Vec::Zero(1)}}, 1);
    CHECK(std::abs(fd1.value - Q.jet(1, y, {d0})[0]) < 1e-7);

    auto fd1s = seeley::fd_jet(val, at, {Tangent{0.0, Vec::Constant(1, 1.0)}}, 1);
    CHECK(std::abs(fd1s.value - Q.jet(1, y, {d1})[0]) < 1e-7);

    TangentTuple wm = {Tangent{0.6, Vec::Constant(1, -0.8)},
                       Tangent{0.6, Vec::Constant(1, -0.8)}};
    auto fd2 = seeley::fd_jet(val, at, wm, 2);
    CHECK(std::abs(fd2.value - Q.jet(2, y, {mixed, mixed})[0]) < 1e-5);
  }
}

TEST_CASE("query validation") {
  auto f = seeley::corner_source(seeley::tf_product_uv(), 2, 3);
  auto Q = seeley::extend_quadrant(f, square_config(3));
  Vec y(2);
  y << 0.1, 0.1;
  CHECK_THROWS_AS(Q.jet(4, y, std::vector<Vec>(4, Vec::Zero(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(Q.jet(1, y, {}), std::invalid_argument);
  CHECK_THROWS_AS(Q.jet(1, Vec::Zero(3), {Vec::Zero(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Q.jet(1, y, {Vec::Zero(1)}), std::invalid_argument);
}
