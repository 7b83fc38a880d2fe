#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "seeley/halfline.hpp"
#include "seeley/jets.hpp"
#include "seeley/testfunctions.hpp"

namespace seeley {

// One corner variable's extension frame. upsilon defaults to the midpoint of
// (tau, b); kappa and kappa_prime are only consulted when a is finite.
struct AxisConfig {
  double a = -std::numeric_limits<double>::infinity();
  double tau = -1.0;
  double b = 0.0;
  double upsilon = std::numeric_limits<double>::quiet_NaN();
  double kappa = std::numeric_limits<double>::quiet_NaN();
  double kappa_prime = std::numeric_limits<double>::quiet_NaN();
};

struct QuadrantConfig {
  std::vector<AxisConfig> axes;
  int k = 3;
  int order_cap = kDefaultOrderCap;
};

// A function on cube(a,b) x R^m in flat coordinates y = (y_0..y_{n-1}, x),
// with jets through order k taking directions in R^{n+m}.
struct CornerJetFunction {
  int k = 0;
  int value_dim = 1;
  int corner_dim = 1;
  int space_dim = 0;
  std::function<Vec(int ell, const Vec& y, const std::vector<Vec>& dirs)> jet;
};

// View a SmoothND as a corner source: the first corner_dim coordinates are
// the corner variables, the rest the abstract space.
CornerJetFunction corner_source(const SmoothND& f, int corner_dim, int k);

// The half-line operator folded over the corner variables, axis n-1 first
// and axis 0 last; while axis i is extended, the other coordinates ride
// along as part of the abstract space. Each stage is a lazy jet oracle, so
// no grids are materialized between axes.
class QuadrantExtension {
 public:
  QuadrantExtension(CornerJetFunction source, QuadrantConfig config);

  const QuadrantConfig& config() const { return config_; }
  int corner_dim() const { return source_.corner_dim; }
  int space_dim() const { return source_.space_dim; }
  int value_dim() const { return source_.value_dim; }
  int order() const { return order_; }

  // Queries with y[axis] at or past this are identically zero.
  double vanish_from(int axis) const;

  Vec jet(int ell, const Vec& y, const std::vector<Vec>& dirs) const;
  Vec value(const Vec& y) const;

 private:
  QuadrantConfig config_;
  CornerJetFunction source_;
  CornerJetFunction flat_;
  int order_ = 0;
};

QuadrantExtension extend_quadrant(const CornerJetFunction& f,
                                  const QuadrantConfig& config);

Vec quadrant_jet(const QuadrantExtension& F, int ell, const Vec& y,
                 const std::vector<Vec>& dirs);

}  // namespace seeley
