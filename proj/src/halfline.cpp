#include "seeley/halfline.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace seeley {

namespace {

double powi(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Neumaier compensated accumulator, one compensation slot per component.
struct CompAcc {
  Eigen::ArrayXd s, c;
  explicit CompAcc(int n) : s(Eigen::ArrayXd::Zero(n)), c(Eigen::ArrayXd::Zero(n)) {}

  void add(const Vec& v) {
    for (int i = 0; i < s.size(); ++i) {
      double t = s[i] + v[i];
      if (std::abs(s[i]) >= std::abs(v[i])) {
        c[i] += (s[i] - t) + v[i];
      } else {
        c[i] += (v[i] - t) + s[i];
      }
      s[i] = t;
    }
  }

  Vec value() const { return (s + c).matrix(); }
};

// Double-double accumulator for sum_j c_j * v_j with the weight split into a
// rounded head and a residual tail. Keeps the alternating, badly conditioned
// weight sum accurate well past plain double.
struct DDAcc {
  Eigen::ArrayXd s, e;
  explicit DDAcc(int n) : s(Eigen::ArrayXd::Zero(n)), e(Eigen::ArrayXd::Zero(n)) {}

  void add_scaled(double c_hi, double c_lo, const Vec& v) {
    for (int i = 0; i < s.size(); ++i) {
      double p = c_hi * v[i];
      double perr = std::fma(c_hi, v[i], -p);
      double t = s[i] + p;
      double z = t - s[i];
      double serr = (s[i] - (t - z)) + (p - z);
      s[i] = t;
      e[i] += perr + serr + c_lo * v[i];
    }
  }

  Vec value() const { return (s + e).matrix(); }
};

void check_tuple(const BoundaryJetFunction& f, int ell, const Point& at, const TangentTuple& w) {
  if (static_cast<int>(w.size()) != ell) {
    throw std::invalid_argument("jet query: tuple length must equal the order");
  }
  const int m = f.domain.space_dim;
  if (static_cast<int>(at.x.size()) != m) {
    throw std::invalid_argument("jet query: point dimension mismatch");
  }
  for (const auto& wi : w) {
    if (static_cast<int>(wi.X.size()) != m) {
      throw std::invalid_argument("jet query: tangent dimension mismatch");
    }
  }
}

// Accumulates lambda_{ell,q} for one fixed cutoff derivative value rho_q.
void accumulate_block(const BoundaryJetFunction& f, double rho_q, double d, int ell, int q,
                      const Point& reflected, const TangentTuple& w, CompAcc& acc) {
  const int m = static_cast<int>(reflected.x.size());
  for (int p = q; p <= ell; ++p) {
    const double base = binom(p, q) * powi(d, p) * rho_q;
    for (const IndexSplit& split : enumerate_splits(ell, p)) {
      double chi = chi_product(split, w);
      if (chi == 0.0) continue;
      TangentTuple args;
      args.reserve(ell - q);
      for (int idx : split.o) args.push_back(space_part(w[idx - 1]));
      for (int i = 0; i < p - q; ++i) args.push_back(time_unit(m));
      acc.add((base * chi) * f.jet(ell - q, reflected, args));
    }
  }
}

}  // namespace

void OperatorConfig::validate() const {
  auto fail = [](const char* msg) { throw std::invalid_argument(std::string("config: ") + msg); };
  if (std::isnan(tau) || std::isnan(upsilon) || std::isnan(b)) {
    fail("tau, upsilon and b must be numbers");
  }
  if (!std::isfinite(b)) fail("b must be finite");
  if (!(tau < b)) fail("requires tau < b");
  if (!(tau < upsilon && upsilon < b)) fail("upsilon must lie strictly between tau and b");
  if (std::isnan(a) || a == std::numeric_limits<double>::infinity()) {
    fail("a must be a real number or -infinity");
  }
  if (!(a < tau)) fail("requires a < tau");
  if (finite_a()) {
    if (std::isnan(kappa) || std::isnan(kappa_prime)) {
      fail("finite a requires kappa and kappa_prime");
    }
    if (!(a < kappa && kappa < kappa_prime && kappa_prime < tau)) {
      fail("requires a < kappa < kappa_prime < tau");
    }
  }
  if (order_cap < 0) fail("order cap must be >= 0");
}

int truncation_index(double t, double tau) {
  if (!(t > 0.0)) throw std::invalid_argument("truncation_index: requires t > 0");
  if (!(tau < 0.0)) {
    throw std::invalid_argument("truncation_index: requires tau < 0 (normalized frame)");
  }
  int j = 0;
  while (-std::ldexp(t, j) > tau) ++j;
  return j;
}

Vec gamma_eval(const BoundaryJetFunction& f, const SmoothStep& cutoff, double d, double t,
               const Vec& x) {
  if (!(t > 0.0)) throw std::invalid_argument("gamma_eval: requires t > 0");
  const double r = d * t;
  if (r <= cutoff.lo) return Vec::Zero(f.value_dim);
  double rho = eval(cutoff, r);
  return rho * f.jet(0, Point{r, x}, {});
}

Vec lambda_lq(const BoundaryJetFunction& f, const SmoothStep& cutoff, double d, int ell, int q,
              const Point& at, const TangentTuple& w) {
  if (q < 0 || q > ell) throw std::invalid_argument("lambda_lq: requires 0 <= q <= ell");
  check_tuple(f, ell, at, w);
  if (!(at.t > 0.0)) throw std::invalid_argument("lambda_lq: requires t > 0");
  auto rho = eval_jet(cutoff, d * at.t, q);
  if (rho[q] == 0.0) return Vec::Zero(f.value_dim);
  CompAcc acc(f.value_dim);
  accumulate_block(f, rho[q], d, ell, q, Point{d * at.t, at.x}, w, acc);
  return acc.value();
}

Vec psi_ell(const BoundaryJetFunction& f, const SmoothStep& cutoff, double d, int ell,
            const Point& at, const TangentTuple& w) {
  check_tuple(f, ell, at, w);
  if (!(at.t > 0.0)) throw std::invalid_argument("psi_ell: requires t > 0");
  auto rho = eval_jet(cutoff, d * at.t, ell);
  bool alive = false;
  for (double v : rho) alive = alive || v != 0.0;
  if (!alive) return Vec::Zero(f.value_dim);
  CompAcc acc(f.value_dim);
  Point reflected{d * at.t, at.x};
  for (int q = 0; q <= ell; ++q) {
    if (rho[q] == 0.0) continue;
    accumulate_block(f, rho[q], d, ell, q, reflected, w, acc);
  }
  return acc.value();
}

Translation translate_b(const OperatorConfig& config) { return Translation{config.b}; }

BoundaryJetFunction reduce_finite_a(const BoundaryJetFunction& f, const OperatorConfig& config) {
  config.validate();
  if (!config.finite_a()) {
    throw std::invalid_argument("reduce_finite_a: config already has a = -infinity");
  }
  const double lo = config.kappa;
  const double hi = config.kappa_prime;
  const SmoothStep ramp = make_step(lo, hi);
  auto inner = std::make_shared<BoundaryJetFunction>(f);

  BoundaryJetFunction out;
  out.k = f.k;
  out.value_dim = f.value_dim;
  out.domain = HalflineDomain{-std::numeric_limits<double>::infinity(), f.domain.b,
                              f.domain.space_dim};
  out.jet = [inner, ramp, lo, hi](int ell, const Point& at, const TangentTuple& w) -> Vec {
    if (at.t <= lo) return Vec::Zero(inner->value_dim);
    if (at.t >= hi) return inner->jet(ell, at, w);
    // Product rule through the time-only ramp factor: differentiating the
    // ramp along slots z yields ramp^(s)(t) times the lambda components;
    // the function factor keeps the full tangents of the complement.
    auto rho = eval_jet(ramp, at.t, ell);
    CompAcc acc(inner->value_dim);
    for (int s = 0; s <= ell; ++s) {
      if (rho[s] == 0.0) continue;
      for (const IndexSplit& split : enumerate_splits(ell, s)) {
        double chi = chi_product(split, w);
        if (chi == 0.0) continue;
        TangentTuple args;
        args.reserve(split.o.size());
        for (int idx : split.o) args.push_back(w[idx - 1]);
        acc.add((rho[s] * chi) * inner->jet(ell - s, at, args));
      }
    }
    return acc.value();
  };
  return out;
}

ExtendedFunction::ExtendedFunction(BoundaryJetFunction source, OperatorConfig config)
    : config_(config), source_(std::move(source)) {
  config_.validate();
  order_k_ = config_.effective_k();
  if (!source_.jet) throw std::invalid_argument("extend: source jet oracle is empty");
  if (source_.k < order_k_) {
    throw std::invalid_argument("extend: source jets certified below the operator order");
  }
  coeffs_ = compute_coefficients(order_k_);
  cutoff_ = make_step(config_.tau - config_.b, config_.upsilon - config_.b);

  BoundaryJetFunction base = config_.finite_a() ? reduce_finite_a(source_, config_) : source_;
  if (config_.b != 0.0) {
    const double b = config_.b;
    auto held = std::make_shared<BoundaryJetFunction>(std::move(base));
    BoundaryJetFunction shifted;
    shifted.k = held->k;
    shifted.value_dim = held->value_dim;
    shifted.domain = HalflineDomain{-std::numeric_limits<double>::infinity(), 0.0,
                                    held->domain.space_dim};
    shifted.jet = [held, b](int ell, const Point& at, const TangentTuple& w) {
      return held->jet(ell, Point{at.t + b, at.x}, w);
    };
    sum_source_ = std::move(shifted);
  } else {
    sum_source_ = std::move(base);
  }
}

Vec ExtendedFunction::jet(int ell, const Point& at, const TangentTuple& w) const {
  if (ell < 0 || ell > order_k_) {
    throw std::invalid_argument("jet: order exceeds the operator order");
  }
  check_tuple(source_, ell, at, w);
  if (!(at.t > config_.a)) throw std::domain_error("jet: t is at or below a");
  if (at.t <= config_.b) return source_.jet(ell, at, w);

  const double that = at.t - config_.b;
  const double tau_hat = config_.tau - config_.b;
  const int terms = std::min(truncation_index(that, tau_hat), coeffs_.count_N);
  DDAcc acc(source_.value_dim);
  Point pt{that, at.x};
  for (int j = 0; j < terms; ++j) {
    double d = -std::ldexp(1.0, j);
    acc.add_scaled(coeffs_.shadow[j], coeffs_.shadow_tail[j],
                   psi_ell(sum_source_, cutoff_, d, ell, pt, w));
  }
  return acc.value();
}

Vec ExtendedFunction::value(double t, const Vec& x) const { return jet(0, Point{t, x}, {}); }

ExtendedFunction extend(const BoundaryJetFunction& f, const OperatorConfig& config) {
  return ExtendedFunction(f, config);
}

Vec extended_jet(const ExtendedFunction& F, int ell, const Point& at, const TangentTuple& w) {
  return F.jet(ell, at, w);
}

}  // namespace seeley
