#pragma once

#include <cstdint>
#include <string>

#include "seeley/jets.hpp"

namespace seeley {

// A smooth function of dim real coordinates with exact mixed partial
// derivatives: partial(order, y) returns the derivative with multiplicity
// order[c] in coordinate c, evaluated at y. Everything downstream (operator
// sources, oracles, CLI test functions) is generated from this one shape.
struct SmoothND {
  int dim = 1;
  int value_dim = 1;
  std::function<Vec(const std::vector<int>& order, const Eigen::VectorXd& y)> partial;
};

// Full derivative as a symmetric multilinear form:
// d^ell f(y)(dirs[0], ..., dirs[ell-1]). Cost dim^ell.
Vec dense_jet(const SmoothND& f, const Eigen::VectorXd& y,
              const std::vector<Eigen::VectorXd>& dirs);

// View a SmoothND with coordinates (t, x_1..x_m) as an operator source on
// (a, b) x R^m with jets through order k.
BoundaryJetFunction halfline_source(const SmoothND& f, double a, double b, int k);

// Source whose jets are alpha*f + beta*g; f and g must share domain, order,
// and value dimension.
BoundaryJetFunction linear_combination(const BoundaryJetFunction& f,
                                       const BoundaryJetFunction& g,
                                       double alpha, double beta);

// Stock test functions.
SmoothND tf_constant(double value, int dim);
SmoothND tf_t_power(int q, int space_dim = 0);
SmoothND tf_exp_t();
SmoothND tf_exp_cos();
SmoothND tf_sin_sum(int dim);
SmoothND tf_product_uv();
SmoothND tf_linear_sum(int dim);
SmoothND tf_x2_plus_y();
SmoothND tf_bump_cubic(double x0);
SmoothND random_polynomial(std::uint64_t seed, int dim, int degree, int value_dim = 1);

// Lookup by CLI name ("one", "t^3", "exp", "exp_cos", "sin_sum", "x2+y", ...).
SmoothND make_test_function(const std::string& name, int dim);

}  // namespace seeley
