#pragma once

#include <vector>

namespace seeley {

enum class StepShape { kExpReciprocal };

// Smooth transition: exactly 0 on (-inf, lo], exactly 1 on [hi, inf),
// strictly increasing in between, all derivatives vanishing at both ends.
struct SmoothStep {
  double lo = -1.0;
  double hi = -0.5;
  StepShape shape = StepShape::kExpReciprocal;
};

// Grid-sampled sup of |step^(j)(t)| over j <= order_p and t in the sampled
// window. Diagnostic only; no correctness path depends on it.
struct CutoffConstants {
  int order_p = 0;
  double M_p = 1.0;
  int grid_points = 0;
  double grid_step = 0.0;
};

SmoothStep make_step(double lo, double hi);

double eval(const SmoothStep& step, double t);

// Value and derivatives 0..order at t, by truncated-polynomial (Taylor-mode)
// arithmetic through sigma(u) = exp(-1/u). Exact zeros outside (lo, hi).
std::vector<double> eval_jet(const SmoothStep& step, double t, int order);

// Sup over [step.lo, t_max]; the grid is clamped to at least 10^4 points.
CutoffConstants sup_constants(const SmoothStep& step, int p, int grid_points = 10001,
                              double t_max = 0.0);

}  // namespace seeley
