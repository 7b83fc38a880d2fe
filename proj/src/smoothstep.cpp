#include "seeley/smoothstep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seeley {

namespace {

constexpr int kMaxJetOrder = 64;

// Truncated Taylor series around the evaluation point; c[i] is the i-th
// Taylor coefficient f^(i)/i!.
struct Series {
  std::vector<double> c;
  explicit Series(int n) : c(n, 0.0) {}
  int size() const { return static_cast<int>(c.size()); }
};

Series add(const Series& a, const Series& b) {
  Series r(a.size());
  for (int i = 0; i < a.size(); ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

// q = n / d with d.c[0] != 0, by the standard division recurrence.
Series divide(const Series& n, const Series& d) {
  Series q(n.size());
  for (int i = 0; i < n.size(); ++i) {
    double s = n.c[i];
    for (int j = 1; j <= i; ++j) s -= d.c[j] * q.c[i - j];
    q.c[i] = s / d.c[0];
  }
  return q;
}

// exp(a) via e' = a' * e, i.e. e_n = (1/n) * sum_{i=1..n} i * a_i * e_{n-i}.
// An underflowed leading value propagates exact zeros through the whole jet,
// which is the correct flat limit.
Series exp_of(const Series& a) {
  Series e(a.size());
  e.c[0] = std::exp(a.c[0]);
  for (int n = 1; n < a.size(); ++n) {
    double s = 0.0;
    for (int i = 1; i <= n; ++i) s += i * a.c[i] * e.c[n - i];
    e.c[n] = s / n;
  }
  return e;
}

// sigma(u) = exp(-1/u) for an affine argument series with u.c[0] > 0.
Series sigma_of(const Series& u) {
  Series one(u.size());
  one.c[0] = 1.0;
  Series r = divide(one, u);
  for (double& v : r.c) v = -v;
  return exp_of(r);
}

}  // namespace

SmoothStep make_step(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("make_step: requires lo < hi");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("make_step: bounds must be finite");
  }
  return SmoothStep{lo, hi, StepShape::kExpReciprocal};
}

std::vector<double> eval_jet(const SmoothStep& step, double t, int order) {
  if (order < 0 || order > kMaxJetOrder) {
    throw std::invalid_argument("eval_jet: order out of range");
  }
  std::vector<double> jet(order + 1, 0.0);
  if (t <= step.lo) return jet;
  if (t >= step.hi) {
    jet[0] = 1.0;
    return jet;
  }

  const int n = order + 1;
  const double width = step.hi - step.lo;
  Series u(n);
  u.c[0] = (t - step.lo) / width;
  if (n > 1) u.c[1] = 1.0 / width;
  Series v(n);
  v.c[0] = 1.0 - u.c[0];
  if (n > 1) v.c[1] = -1.0 / width;

  Series a = sigma_of(u);
  Series b = sigma_of(v);
  Series s = divide(a, add(a, b));

  double factorial = 1.0;
  for (int i = 0; i <= order; ++i) {
    if (i > 0) factorial *= i;
    jet[i] = s.c[i] * factorial;
  }
  return jet;
}

double eval(const SmoothStep& step, double t) { return eval_jet(step, t, 0)[0]; }

CutoffConstants sup_constants(const SmoothStep& step, int p, int grid_points, double t_max) {
  if (p < 0 || p > kMaxJetOrder) throw std::invalid_argument("sup_constants: bad order");
  if (!(step.lo < t_max)) {
    throw std::invalid_argument("sup_constants: window [lo, t_max] is empty");
  }
  grid_points = std::max(grid_points, 10001);
  CutoffConstants out;
  out.order_p = p;
  out.grid_points = grid_points;
  out.grid_step = (t_max - step.lo) / (grid_points - 1);
  double m = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    double t = step.lo + i * out.grid_step;
    auto jet = eval_jet(step, t, p);
    for (double v : jet) m = std::max(m, std::abs(v));
  }
  out.M_p = std::max(m, 1.0);
  return out;
}

}  // namespace seeley
