#include "seeley/batch.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace seeley {

namespace {

void check_axes(const GridSpec& spec) {
  if (spec.axes.empty()) {
    throw std::invalid_argument("grid: needs at least one axis");
  }
  for (const auto& ax : spec.axes) {
    if (ax.count < 1) {
      throw std::invalid_argument("grid: axis count must be positive");
    }
    if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi) || !(ax.lo <= ax.hi)) {
      throw std::invalid_argument("grid: axis bounds must be finite and ordered");
    }
  }
}

void check_eval(const PointFunction& fun, int value_dim) {
  if (!fun) {
    throw std::invalid_argument("eval_grid: function is empty");
  }
  if (value_dim < 1) {
    throw std::invalid_argument("eval_grid: value dimension must be positive");
  }
}

}  // namespace

long GridSpec::total() const {
  check_axes(*this);
  long n = 1;
  for (const auto& ax : axes) n *= ax.count;
  return n;
}

Vec GridSpec::point(long index) const {
  const long n = total();
  if (index < 0 || index >= n) {
    throw std::invalid_argument("grid: point index out of range");
  }
  Vec y(static_cast<int>(axes.size()));
  long rest = index;
  for (int axis = static_cast<int>(axes.size()) - 1; axis >= 0; --axis) {
    const GridAxis& ax = axes[axis];
    const long i = rest % ax.count;
    rest /= ax.count;
    y[axis] = ax.count == 1
                  ? ax.lo
                  : ax.lo + (ax.hi - ax.lo) * static_cast<double>(i) /
                                (ax.count - 1);
  }
  return y;
}

Eigen::MatrixXd grid_points(const GridSpec& spec) {
  const long n = spec.total();
  Eigen::MatrixXd pts(n, static_cast<int>(spec.axes.size()));
  for (long i = 0; i < n; ++i) pts.row(i) = spec.point(i).transpose();
  return pts;
}

Eigen::MatrixXd eval_grid(const PointFunction& fun, const GridSpec& spec,
                          int value_dim) {
  check_eval(fun, value_dim);
  const long n = spec.total();
  Eigen::MatrixXd out(n, value_dim);
  std::atomic<bool> bad{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < n; ++i) {
    Vec v = fun(spec.point(i));
    if (v.size() != value_dim) {
      bad.store(true, std::memory_order_relaxed);
    } else {
      out.row(i) = v.transpose();
    }
  }
  if (bad.load()) {
    throw std::invalid_argument("eval_grid: function value dimension mismatch");
  }
  return out;
}

Eigen::MatrixXd eval_grid_serial(const PointFunction& fun, const GridSpec& spec,
                                 int value_dim) {
  check_eval(fun, value_dim);
  const long n = spec.total();
  Eigen::MatrixXd out(n, value_dim);
  for (long i = 0; i < n; ++i) {
    Vec v = fun(spec.point(i));
    if (v.size() != value_dim) {
      throw std::invalid_argument(
          "eval_grid: function value dimension mismatch");
    }
    out.row(i) = v.transpose();
  }
  return out;
}

}  // namespace seeley
