#include "seeley/quadrant.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace seeley {

namespace {

OperatorConfig axis_operator(const AxisConfig& ax, int k, int order_cap) {
  OperatorConfig cfg;
  cfg.a = ax.a;
  cfg.tau = ax.tau;
  cfg.b = ax.b;
  cfg.upsilon = std::isnan(ax.upsilon) ? 0.5 * (ax.tau + ax.b) : ax.upsilon;
  cfg.kappa = ax.kappa;
  cfg.kappa_prime = ax.kappa_prime;
  cfg.k = k;
  cfg.order_cap = order_cap;
  return cfg;
}

// Present a flat-coordinate stage as a half-line source in coordinate
// `axis`; the other coordinates become the abstract space, in flat order.
BoundaryJetFunction as_halfline(const CornerJetFunction& g, int axis,
                                double a, double b) {
  const int dim = g.corner_dim + g.space_dim;
  BoundaryJetFunction src;
  src.k = g.k;
  src.value_dim = g.value_dim;
  src.domain = HalflineDomain{a, b, dim - 1};
  auto jet = g.jet;
  src.jet = [jet, axis, dim](int ell, const Point& at, const TangentTuple& w) {
    Vec y(dim);
    y[axis] = at.t;
    int c = 0;
    for (int i = 0; i < dim; ++i) {
      if (i != axis) y[i] = at.x[c++];
    }
    std::vector<Vec> dirs;
    dirs.reserve(w.size());
    for (const auto& u : w) {
      Vec d(dim);
      d[axis] = u.lambda;
      int cc = 0;
      for (int i = 0; i < dim; ++i) {
        if (i != axis) d[i] = u.X[cc++];
      }
      dirs.push_back(std::move(d));
    }
    return jet(ell, y, dirs);
  };
  return src;
}

// Wrap one extended axis back into flat coordinates.
CornerJetFunction as_flat(std::shared_ptr<ExtendedFunction> F, int axis,
                          const CornerJetFunction& like) {
  CornerJetFunction g;
  g.k = like.k;
  g.value_dim = like.value_dim;
  g.corner_dim = like.corner_dim;
  g.space_dim = like.space_dim;
  const int dim = g.corner_dim + g.space_dim;
  g.jet = [F, axis, dim](int ell, const Vec& y, const std::vector<Vec>& dirs) {
    Point at;
    at.t = y[axis];
    at.x.resize(dim - 1);
    int c = 0;
    for (int i = 0; i < dim; ++i) {
      if (i != axis) at.x[c++] = y[i];
    }
    TangentTuple w;
    w.reserve(dirs.size());
    for (const auto& d : dirs) {
      Tangent u;
      u.lambda = d[axis];
      u.X.resize(dim - 1);
      int cc = 0;
      for (int i = 0; i < dim; ++i) {
        if (i != axis) u.X[cc++] = d[i];
      }
      w.push_back(std::move(u));
    }
    return F->jet(ell, at, w);
  };
  return g;
}

}  // namespace

CornerJetFunction corner_source(const SmoothND& f, int corner_dim, int k) {
  if (corner_dim < 1 || corner_dim > f.dim) {
    throw std::invalid_argument("corner_source: corner arity out of range");
  }
  CornerJetFunction out;
  out.k = k;
  out.value_dim = f.value_dim;
  out.corner_dim = corner_dim;
  out.space_dim = f.dim - corner_dim;
  out.jet = [f](int ell, const Vec& y, const std::vector<Vec>& dirs) {
    if (static_cast<int>(dirs.size()) != ell) {
      throw std::invalid_argument(
          "source jet: tuple length must equal the order");
    }
    return dense_jet(f, y, dirs);
  };
  return out;
}

QuadrantExtension::QuadrantExtension(CornerJetFunction source,
                                     QuadrantConfig config)
    : config_(std::move(config)), source_(std::move(source)) {
  const int n = static_cast<int>(config_.axes.size());
  if (n < 1) {
    throw std::invalid_argument("quadrant extension: needs at least one axis");
  }
  if (source_.corner_dim != n) {
    throw std::invalid_argument(
        "quadrant extension: axis count must match the corner arity");
  }
  if (!source_.jet) {
    throw std::invalid_argument("quadrant extension: source jet is empty");
  }
  order_ = effective_order(config_.k, config_.order_cap);
  if (source_.k < order_) {
    throw std::invalid_argument(
        "quadrant extension: source jets are weaker than the operator order");
  }
  for (const auto& ax : config_.axes) {
    axis_operator(ax, config_.k, config_.order_cap).validate();
  }

  CornerJetFunction stage = source_;
  for (int axis = n - 1; axis >= 0; --axis) {
    auto cfg = axis_operator(config_.axes[axis], config_.k, config_.order_cap);
    auto F = std::make_shared<ExtendedFunction>(
        as_halfline(stage, axis, cfg.a, cfg.b), cfg);
    stage = as_flat(std::move(F), axis, source_);
  }
  flat_ = std::move(stage);
}

double QuadrantExtension::vanish_from(int axis) const {
  if (axis < 0 || axis >= static_cast<int>(config_.axes.size())) {
    throw std::invalid_argument("vanish_from: no such axis");
  }
  return 2.0 * config_.axes[axis].b - config_.axes[axis].tau;
}

Vec QuadrantExtension::jet(int ell, const Vec& y,
                           const std::vector<Vec>& dirs) const {
  if (ell < 0 || ell > order_) {
    throw std::invalid_argument("jet query: order exceeds the operator order");
  }
  if (static_cast<int>(dirs.size()) != ell) {
    throw std::invalid_argument(
        "jet query: tuple length must equal the order");
  }
  const int dim = source_.corner_dim + source_.space_dim;
  if (y.size() != dim) {
    throw std::invalid_argument("jet query: point dimension mismatch");
  }
  for (const auto& d : dirs) {
    if (d.size() != dim) {
      throw std::invalid_argument("jet query: direction dimension mismatch");
    }
  }
  return flat_.jet(ell, y, dirs);
}

Vec QuadrantExtension::value(const Vec& y) const { return jet(0, y, {}); }

QuadrantExtension extend_quadrant(const CornerJetFunction& f,
                                  const QuadrantConfig& config) {
  return QuadrantExtension(f, config);
}

Vec quadrant_jet(const QuadrantExtension& F, int ell, const Vec& y,
                 const std::vector<Vec>& dirs) {
  return F.jet(ell, y, dirs);
}

}  // namespace seeley
