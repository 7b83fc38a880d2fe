#pragma once

#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Core>

namespace seeley {

using Vec = Eigen::VectorXd;

// A point (t, x) of the half-line-times-space domain.
struct Point {
  double t = 0.0;
  Vec x;
};

// A tangent vector (lambda, X) of R x E.
struct Tangent {
  double lambda = 0.0;
  Vec X;
};

using TangentTuple = std::vector<Tangent>;

Tangent time_unit(int space_dim);      // (1, 0)
Tangent space_part(const Tangent& w);  // (0, X)

// A partition of the slot set {1..ell} into "time" positions z (size p) and
// "space" positions o (size ell-p); both lists ascending, indices 1-based.
struct IndexSplit {
  int ell = 0;
  int p = 0;
  std::vector<int> z;
  std::vector<int> o;
};

// All binomial(ell, p) splits in lexicographic order on z. The returned
// reference points into a lazily built immutable table.
const std::vector<IndexSplit>& enumerate_splits(int ell, int p);

// Product of the lambda components at the z positions; 1 for p = 0.
double chi_product(const IndexSplit& split, const TangentTuple& w);

struct HalflineDomain {
  double a = -std::numeric_limits<double>::infinity();
  double b = 0.0;
  int space_dim = 0;
};

// The input data of the extension operator: evaluators for a function and
// its differentials up to order k on (a, b] x space, against tangent tuples.
// jet(ell, at, w) must be symmetric and multilinear in w for fixed at.
struct BoundaryJetFunction {
  int k = 0;
  int value_dim = 1;
  HalflineDomain domain;
  std::function<Vec(int ell, const Point& at, const TangentTuple& w)> jet;
};

using JetForm = std::function<Vec(const Point& at, const TangentTuple& w)>;

// Expand a symmetric multilinear form over the product structure R x E:
// evaluates the double sum over p and splits of chi-products times the form
// applied to space parts padded with time units. Equals jet(at, w) when the
// form really is symmetric multilinear; used as a consistency oracle.
Vec symmetric_decompose(const JetForm& jet, const Point& at, const TangentTuple& w);

}  // namespace seeley
