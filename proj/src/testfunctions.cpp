#include "seeley/testfunctions.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

namespace seeley {

namespace {

// Repeated multiplication keeps powers of exact dyadic inputs exact, which
// the reproduction guarantees rely on; std::pow does not promise that.
double powi(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

double falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

int total_order(const std::vector<int>& order) {
  int s = 0;
  for (int v : order) s += v;
  return s;
}

void dense_jet_rec(const SmoothND& f, const Eigen::VectorXd& y,
                   const std::vector<Eigen::VectorXd>& dirs, size_t slot,
                   std::vector<int>& order, double weight, Vec& acc) {
  if (weight == 0.0) return;
  if (slot == dirs.size()) {
    acc += weight * f.partial(order, y);
    return;
  }
  for (int c = 0; c < f.dim; ++c) {
    double wc = dirs[slot][c];
    if (wc == 0.0) continue;
    ++order[c];
    dense_jet_rec(f, y, dirs, slot + 1, order, weight * wc, acc);
    --order[c];
  }
}

}  // namespace

Vec dense_jet(const SmoothND& f, const Eigen::VectorXd& y,
              const std::vector<Eigen::VectorXd>& dirs) {
  for (const auto& d : dirs) {
    if (d.size() != f.dim) throw std::invalid_argument("dense_jet: direction dimension mismatch");
  }
  if (y.size() != f.dim) throw std::invalid_argument("dense_jet: point dimension mismatch");
  Vec acc = Vec::Zero(f.value_dim);
  std::vector<int> order(f.dim, 0);
  dense_jet_rec(f, y, dirs, 0, order, 1.0, acc);
  return acc;
}

BoundaryJetFunction halfline_source(const SmoothND& f, double a, double b, int k) {
  if (f.dim < 1) throw std::invalid_argument("halfline_source: needs at least the t coordinate");
  BoundaryJetFunction src;
  src.k = k;
  src.value_dim = f.value_dim;
  src.domain = HalflineDomain{a, b, f.dim - 1};
  src.jet = [f](int ell, const Point& at, const TangentTuple& w) {
    if (static_cast<int>(w.size()) != ell) {
      throw std::invalid_argument("source jet: tuple length must equal the order");
    }
    Eigen::VectorXd y(f.dim);
    y[0] = at.t;
    y.tail(f.dim - 1) = at.x;
    std::vector<Eigen::VectorXd> dirs;
    dirs.reserve(w.size());
    for (const auto& wi : w) {
      Eigen::VectorXd d(f.dim);
      d[0] = wi.lambda;
      d.tail(f.dim - 1) = wi.X;
      dirs.push_back(std::move(d));
    }
    return dense_jet(f, y, dirs);
  };
  return src;
}

BoundaryJetFunction linear_combination(const BoundaryJetFunction& f,
                                       const BoundaryJetFunction& g,
                                       double alpha, double beta) {
  if (f.value_dim != g.value_dim ||
      f.domain.space_dim != g.domain.space_dim || f.k != g.k) {
    throw std::invalid_argument("linear_combination: sources do not match");
  }
  BoundaryJetFunction out = f;
  auto fj = f.jet;
  auto gj = g.jet;
  out.jet = [fj, gj, alpha, beta](int ell, const Point& at,
                                  const TangentTuple& w) {
    return Vec(alpha * fj(ell, at, w) + beta * gj(ell, at, w));
  };
  return out;
}

SmoothND tf_constant(double value, int dim) {
  SmoothND f;
  f.dim = dim;
  f.partial = [value](const std::vector<int>& order, const Eigen::VectorXd&) {
    Vec out(1);
    out[0] = total_order(order) == 0 ? value : 0.0;
    return out;
  };
  return f;
}

SmoothND tf_t_power(int q, int space_dim) {
  if (q < 0) throw std::invalid_argument("tf_t_power: exponent must be >= 0");
  SmoothND f;
  f.dim = 1 + space_dim;
  f.partial = [q](const std::vector<int>& order, const Eigen::VectorXd& y) {
    Vec out(1);
    int i = order[0];
    bool space_touched = total_order(order) != i;
    if (space_touched || i > q) {
      out[0] = 0.0;
    } else {
      out[0] = falling(q, i) * powi(y[0], q - i);
    }
    return out;
  };
  return f;
}

SmoothND tf_exp_t() {
  SmoothND f;
  f.partial = [](const std::vector<int>&, const Eigen::VectorXd& y) {
    Vec out(1);
    out[0] = std::exp(y[0]);
    return out;
  };
  return f;
}

SmoothND tf_exp_cos() {
  SmoothND f;
  f.dim = 2;
  f.partial = [](const std::vector<int>& order, const Eigen::VectorXd& y) {
    Vec out(1);
    double c;
    switch (order[1] % 4) {
      case 0: c = std::cos(y[1]); break;
      case 1: c = -std::sin(y[1]); break;
      case 2: c = -std::cos(y[1]); break;
      default: c = std::sin(y[1]); break;
    }
    out[0] = std::exp(y[0]) * c;
    return out;
  };
  return f;
}

SmoothND tf_sin_sum(int dim) {
  SmoothND f;
  f.dim = dim;
  f.partial = [](const std::vector<int>& order, const Eigen::VectorXd& y) {
    Vec out(1);
    double s = y.sum();
    switch (total_order(order) % 4) {
      case 0: out[0] = std::sin(s); break;
      case 1: out[0] = std::cos(s); break;
      case 2: out[0] = -std::sin(s); break;
      default: out[0] = -std::cos(s); break;
    }
    return out;
  };
  return f;
}

SmoothND tf_product_uv() {
  SmoothND f;
  f.dim = 2;
  f.partial = [](const std::vector<int>& order, const Eigen::VectorXd& y) {
    Vec out(1);
    int i = order[0], j = order[1];
    if (i > 1 || j > 1) {
      out[0] = 0.0;
    } else if (i == 0 && j == 0) {
      out[0] = y[0] * y[1];
    } else if (i == 1 && j == 0) {
      out[0] = y[1];
    } else if (i == 0 && j == 1) {
      out[0] = y[0];
    } else {
      out[0] = 1.0;
    }
    return out;
  };
  return f;
}

SmoothND tf_linear_sum(int dim) {
  SmoothND f;
  f.dim = dim;
  f.partial = [](const std::vector<int>& order, const Eigen::VectorXd& y) {
    Vec out(1);
    int n = total_order(order);
    if (n == 0) {
      out[0] = y.sum();
    } else if (n == 1) {
      out[0] = 1.0;
    } else {
      out[0] = 0.0;
    }
    return out;
  };
  return f;
}

SmoothND tf_x2_plus_y() {
  SmoothND f;
  f.dim = 2;
  f.partial = [](const std::vector<int>& order, const Eigen::VectorXd& y) {
    Vec out(1);
    int i = order[0], j = order[1];
    if (i == 0 && j == 0) {
      out[0] = y[0] * y[0] + y[1];
    } else if (i == 1 && j == 0) {
      out[0] = 2.0 * y[0];
    } else if (i == 2 && j == 0) {
      out[0] = 2.0;
    } else if (i == 0 && j == 1) {
      out[0] = 1.0;
    } else {
      out[0] = 0.0;
    }
    return out;
  };
  return f;
}

SmoothND tf_bump_cubic(double x0) {
  SmoothND f;
  f.dim = 2;
  f.partial = [x0](const std::vector<int>& order, const Eigen::VectorXd& y) {
    Vec out(1);
    int j = order[1];
    if (j > 3) {
      out[0] = 0.0;
    } else {
      out[0] = std::exp(y[0]) * falling(3, j) * powi(y[1] - x0, 3 - j);
    }
    return out;
  };
  return f;
}

SmoothND random_polynomial(std::uint64_t seed, int dim, int degree, int value_dim) {
  struct Monomial {
    std::vector<int> exps;
    Vec coeff;
  };
  auto monomials = std::make_shared<std::vector<Monomial>>();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  std::vector<int> exps(dim, 0);
  std::function<void(int, int)> emit = [&](int coord, int remaining) {
    if (coord == dim) {
      Monomial m;
      m.exps = exps;
      m.coeff = Vec::NullaryExpr(value_dim, [&](Eigen::Index) { return u(rng); });
      monomials->push_back(std::move(m));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[coord] = e;
      emit(coord + 1, remaining - e);
    }
    exps[coord] = 0;
  };
  emit(0, degree);

  SmoothND f;
  f.dim = dim;
  f.value_dim = value_dim;
  f.partial = [monomials, dim, value_dim](const std::vector<int>& order,
                                          const Eigen::VectorXd& y) {
    Vec out = Vec::Zero(value_dim);
    for (const auto& m : *monomials) {
      double factor = 1.0;
      for (int c = 0; c < dim && factor != 0.0; ++c) {
        if (order[c] > m.exps[c]) {
          factor = 0.0;
        } else {
          factor *= falling(m.exps[c], order[c]) * powi(y[c], m.exps[c] - order[c]);
        }
      }
      if (factor != 0.0) out += factor * m.coeff;
    }
    return out;
  };
  return f;
}

SmoothND make_test_function(const std::string& name, int dim) {
  if (name == "one") return tf_constant(1.0, dim);
  if (name == "t") return tf_t_power(1, dim - 1);
  if (name.size() == 3 && name[0] == 't' && name[1] == '^' && name[2] >= '0' && name[2] <= '9') {
    return tf_t_power(name[2] - '0', dim - 1);
  }
  if (name == "exp") return tf_exp_t();
  if (name == "exp_cos") return tf_exp_cos();
  if (name == "sin_sum") return tf_sin_sum(dim);
  if (name == "uv") return tf_product_uv();
  if (name == "linear") return tf_linear_sum(dim);
  if (name == "x2+y") return tf_x2_plus_y();
  throw std::invalid_argument("unknown test function: " + name);
}

}  // namespace seeley
