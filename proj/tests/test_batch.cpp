#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "seeley/batch.hpp"

#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "seeley/halfline.hpp"
#include "seeley/testfunctions.hpp"

using seeley::GridAxis;
using seeley::GridSpec;
using seeley::Vec;

TEST_CASE("grid axes expand to evenly spaced points, last axis fastest") {
  GridSpec spec;
  spec.axes.push_back(GridAxis{0.0, 1.0, 3});
  spec.axes.push_back(GridAxis{-1.0, 1.0, 2});
  REQUIRE(spec.total() == 6);

  const double expected[6][2] = {{0.0, -1.0}, {0.0, 1.0},  {0.5, -1.0},
                                 {0.5, 1.0},  {1.0, -1.0}, {1.0, 1.0}};
  Eigen::MatrixXd pts = seeley::grid_points(spec);
  REQUIRE(pts.rows() == 6);
  REQUIRE(pts.cols() == 2);
  for (long i = 0; i < 6; ++i) {
    Vec p = spec.point(i);
    for (int c = 0; c < 2; ++c) {
      CHECK(p[c] == expected[i][c]);
      CHECK(pts(i, c) == expected[i][c]);
    }
  }

  GridSpec single;
  single.axes.push_back(GridAxis{0.25, 9.0, 1});
  CHECK(single.total() == 1);
  CHECK(single.point(0)[0] == 0.25);

  GridSpec tight;
  tight.axes.push_back(GridAxis{-2.0, 2.0, 5});
  CHECK(tight.point(4)[0] == 2.0);
  CHECK(tight.point(2)[0] == 0.0);
}

TEST_CASE("grid validation rejects malformed specs") {
  GridSpec empty;
  CHECK_THROWS_AS(empty.total(), std::invalid_argument);
  CHECK_THROWS_AS(seeley::grid_points(empty), std::invalid_argument);

  GridSpec bad;
  bad.axes.push_back(GridAxis{0.0, 1.0, 0});
  CHECK_THROWS_AS(bad.total(), std::invalid_argument);

  GridSpec reversed;
  reversed.axes.push_back(GridAxis{1.0, 0.0, 4});
  CHECK_THROWS_AS(reversed.total(), std::invalid_argument);

  GridSpec inf;
  inf.axes.push_back(
      GridAxis{0.0, std::numeric_limits<double>::infinity(), 4});
  CHECK_THROWS_AS(inf.total(), std::invalid_argument);

  GridSpec ok;
  ok.axes.push_back(GridAxis{0.0, 1.0, 4});
  CHECK_THROWS_AS(ok.point(-1), std::invalid_argument);
  CHECK_THROWS_AS(ok.point(4), std::invalid_argument);

  auto fun = [](const Vec& y) { return Vec::Constant(1, y[0]); };
  CHECK_THROWS_AS(seeley::eval_grid(fun, ok, 0), std::invalid_argument);
  CHECK_THROWS_AS(seeley::eval_grid(seeley::PointFunction{}, ok, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(seeley::eval_grid(fun, ok, 2), std::invalid_argument);
  CHECK_THROWS_AS(seeley::eval_grid_serial(fun, ok, 2), std::invalid_argument);
}

TEST_CASE("parallel and serial grid evaluation agree bitwise") {
  auto src = seeley::halfline_source(seeley::tf_exp_cos(),
                                     -std::numeric_limits<double>::infinity(),
                                     0.0, 3);
  seeley::OperatorConfig cfg;
  cfg.k = 3;
  auto F = seeley::extend(src, cfg);

  GridSpec spec;
  spec.axes.push_back(GridAxis{-0.5, 1.6, 41});
  spec.axes.push_back(GridAxis{-1.0, 1.0, 17});
  auto fun = [&F](const Vec& y) { return F.value(y[0], y.tail(1)); };

  Eigen::MatrixXd par = seeley::eval_grid(fun, spec, 1);
  Eigen::MatrixXd ser = seeley::eval_grid_serial(fun, spec, 1);
  REQUIRE(par.rows() == spec.total());
  REQUIRE(ser.rows() == spec.total());
  CHECK((par.array() == ser.array()).all());

  // The sampled region crosses the vanishing threshold, so the tail of the
  // flattened grid must be exactly zero.
  CHECK(par(par.rows() - 1, 0) == 0.0);
  CHECK(par(0, 0) != 0.0);
}
