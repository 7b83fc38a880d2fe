#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "seeley/jets.hpp"

namespace seeley {

// One closed sample interval [lo, hi] with count evenly spaced points; a
// single-point axis sits at lo.
struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;
};

// Rectangular sample grid, flattened row-major with the last axis fastest.
struct GridSpec {
  std::vector<GridAxis> axes;

  long total() const;
  Vec point(long index) const;
};

// All grid points as rows of a total x dim matrix.
Eigen::MatrixXd grid_points(const GridSpec& spec);

using PointFunction = std::function<Vec(const Vec&)>;

// Evaluate fun at every grid point into a total x value_dim matrix. Rows
// are independent, so the parallel kernel and the serial reference loop
// produce bitwise identical results; keep both so the kernel stays honest.
Eigen::MatrixXd eval_grid(const PointFunction& fun, const GridSpec& spec,
                          int value_dim);
Eigen::MatrixXd eval_grid_serial(const PointFunction& fun, const GridSpec& spec,
                                 int value_dim);

}  // namespace seeley
