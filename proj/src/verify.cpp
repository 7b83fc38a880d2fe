#include "seeley/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "seeley/coefficients.hpp"
#include "seeley/smoothstep.hpp"
#include "seeley/testfunctions.hpp"

namespace seeley {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double powi(double base, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Signed tensor stencil sum over the 2^ell corner offsets, divided by
// (2h)^ell. Tracks the largest |fun| seen for the roundoff model.
double tensor_diff(const std::function<double(const Point&)>& fun,
                   const Point& at, const TangentTuple& w, double h,
                   double* fmax) {
  const int ell = static_cast<int>(w.size());
  double sum = 0.0;
  for (int mask = 0; mask < (1 << ell); ++mask) {
    double t = at.t;
    Vec x = at.x;
    double sign = 1.0;
    for (int i = 0; i < ell; ++i) {
      double s = (mask >> i & 1) ? 1.0 : -1.0;
      sign *= s;
      t += s * h * w[i].lambda;
      if (x.size() > 0) x += (s * h) * w[i].X;
    }
    double v = fun(Point{t, x});
    *fmax = std::max(*fmax, std::abs(v));
    sum += sign * v;
  }
  return sum / powi(2.0 * h, ell);
}

std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec random_vec(std::mt19937_64& rng, int dim, double lo, double hi) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = uniform(rng, lo, hi);
  return v;
}

TangentTuple random_tuple(std::mt19937_64& rng, int ell, int space_dim,
                          double lambda_span) {
  TangentTuple w;
  w.reserve(ell);
  for (int i = 0; i < ell; ++i) {
    Tangent u;
    u.lambda = lambda_span == 0.0 ? 0.0 : uniform(rng, -lambda_span, lambda_span);
    u.X = random_vec(rng, space_dim, -1.0, 1.0);
    w.push_back(std::move(u));
  }
  return w;
}

// All multisets of size ell over pool indices, visited in non-decreasing
// index order. Enough for sup computation because jets are symmetric.
void for_each_multiset(int pool, int ell,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(ell, 0);
  std::function<void(int, int)> rec = [&](int slot, int from) {
    if (slot == ell) {
      fn(pick);
      return;
    }
    for (int i = from; i < pool; ++i) {
      pick[slot] = i;
      rec(slot + 1, i);
    }
  };
  rec(0, 0);
}

}  // namespace

double FDJetOracle::step_for(int order) const {
  if (order <= 2) return h_low;
  if (order == 3) return h_mid;
  return h_high;
}

FDValue fd_jet(const std::function<double(const Point&)>& fun, const Point& at,
               const TangentTuple& w, int order, const FDJetOracle& oracle) {
  if (order < 1 || order > std::min(oracle.max_order, 4)) {
    throw std::invalid_argument("fd_jet: order out of range");
  }
  if (static_cast<int>(w.size()) != order) {
    throw std::invalid_argument("fd_jet: tuple length must equal the order");
  }
  const double h = oracle.step_for(order);
  double reach = 0.0;
  for (const auto& u : w) reach += std::abs(u.lambda);
  reach *= h;
  if (at.t - reach < oracle.t_lo || at.t + reach > oracle.t_hi) {
    throw std::domain_error("fd_jet: stencil leaves the domain");
  }

  double fmax = 0.0;
  double coarse = tensor_diff(fun, at, w, h, &fmax);
  double fine = tensor_diff(fun, at, w, h / 2.0, &fmax);
  double value = (4.0 * fine - coarse) / 3.0;
  double noise = std::ldexp(kEps * fmax, order) / powi(h, order);
  double error = std::abs(value - fine) + 8.0 * noise + 4.0 * kEps * std::abs(value);
  return {value, error};
}

FDValue one_sided_limit(const std::function<double(double)>& fun, double b,
                        int r_lo, int r_hi) {
  if (r_lo < 0 || r_hi < r_lo + 1) {
    throw std::invalid_argument("one_sided_limit: need at least two nodes");
  }
  const int n = r_hi - r_lo + 1;
  std::vector<double> h(n), T(n);
  double vmax = 0.0;
  for (int i = 0; i < n; ++i) {
    h[i] = std::ldexp(1.0, -(r_lo + i));
    T[i] = fun(b + h[i]);
    vmax = std::max(vmax, std::abs(T[i]));
  }

  // Neville toward h = 0, in place; after column j, T[j] holds the diagonal
  // entry built from the first j+1 nodes. Node ratio 2 keeps the update
  // weights 1/(2^j - 1) small, so noise is not amplified.
  double best = T[0];
  double best_err = std::numeric_limits<double>::infinity();
  double prev_diag = T[0];
  for (int j = 1; j < n; ++j) {
    for (int i = n - 1; i >= j; --i) {
      T[i] += (T[i] - T[i - 1]) / (std::ldexp(1.0, j) - 1.0);
    }
    double diag = T[j];
    double err = std::abs(diag - prev_diag);
    if (err <= best_err) {
      best = diag;
      best_err = err;
    }
    prev_diag = diag;
  }
  return {best, best_err + 4.0 * kEps * vmax};
}

PropertyReport finish_report(std::string property, int samples, double max_abs,
                             double max_rel, double threshold,
                             double discrepancy) {
  PropertyReport r;
  r.property = std::move(property);
  r.samples = samples;
  r.max_abs = max_abs;
  r.max_rel = max_rel;
  r.threshold = threshold;
  r.discrepancy = discrepancy;
  r.pass = discrepancy <= threshold;
  return r;
}

nlohmann::json report_json(const PropertyReport& report) {
  nlohmann::json j;
  j["property"] = report.property;
  j["samples"] = report.samples;
  j["max_abs"] = report.max_abs;
  j["max_rel"] = report.max_rel;
  j["threshold"] = report.threshold;
  j["discrepancy"] = report.discrepancy;
  j["pass"] = report.pass;
  return j;
}

nlohmann::json report_json(const std::vector<PropertyReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr;
}

bool all_pass(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) { return r.pass; });
}

PropertyReport check_boundary_match(const ExtendedFunction& F, int max_order,
                                    int tuple_samples, std::uint64_t seed,
                                    double threshold) {
  const int bound = std::min(F.order(), 4);
  if (max_order < 0 || max_order > bound) {
    throw std::invalid_argument(
        "check_boundary_match: order exceeds min(k, 4)");
  }
  const double b = F.config().b;
  const double uhat = F.config().upsilon - b;
  const int N = F.coefficients().count_N;

  // Start deep enough that -2^j t >= upsilon - b for every term: there the
  // cutoff factors are all flat and the jet is a single analytic piece, so
  // the dyadic extrapolation converges at full order.
  const double safe = -uhat / std::ldexp(1.0, N - 1);
  int r_lo = 5;
  while (std::ldexp(1.0, -r_lo) > safe) ++r_lo;
  const int r_hi = r_lo + 15;

  auto rng = engine(seed);
  const int m = F.space_dim();
  double max_abs = 0.0, max_rel = 0.0;
  for (int s = 0; s < tuple_samples; ++s) {
    int ell = s % (max_order + 1);
    Vec x = random_vec(rng, m, -1.0, 1.0);
    TangentTuple w = random_tuple(rng, ell, m, 1.5);
    Vec truth = F.source().jet(ell, Point{b, x}, w);
    for (int c = 0; c < truth.size(); ++c) {
      auto slice = [&](double t) { return F.jet(ell, Point{t, x}, w)[c]; };
      FDValue lim = one_sided_limit(slice, b, r_lo, r_hi);
      double diff = std::abs(lim.value - truth[c]);
      max_abs = std::max(max_abs, diff);
      max_rel = std::max(max_rel, diff / std::max(1.0, std::abs(truth[c])));
    }
  }
  return finish_report("boundary-match", tuple_samples, max_abs, max_rel,
                       threshold, max_abs);
}

PropertyReport check_restriction(const ExtendedFunction& F, int samples,
                                 std::uint64_t seed) {
  auto rng = engine(seed);
  const auto& cfg = F.config();
  const double lo = std::isinf(cfg.a) ? cfg.tau - 1.0
                                      : cfg.a + 0.05 * (cfg.b - cfg.a);
  const int m = F.space_dim();
  const int kcap = std::min(F.order(), 4);
  double max_abs = 0.0;
  for (int s = 0; s < samples; ++s) {
    double t = s == 0 ? cfg.b : uniform(rng, lo, cfg.b);
    int ell = s % (kcap + 1);
    Vec x = random_vec(rng, m, -1.0, 1.0);
    TangentTuple w = random_tuple(rng, ell, m, 1.5);
    Vec got = F.jet(ell, Point{t, x}, w);
    Vec want = F.source().jet(ell, Point{t, x}, w);
    for (int c = 0; c < got.size(); ++c) {
      max_abs = std::max(max_abs, std::abs(got[c] - want[c]));
    }
  }
  return finish_report("restriction", samples, max_abs, max_abs, 0.0, max_abs);
}

PropertyReport check_vanishing(const ExtendedFunction& F, int grid_points,
                               int max_order, std::uint64_t seed) {
  auto rng = engine(seed);
  const auto& cfg = F.config();
  const double start = F.vanish_from();
  const double span = cfg.b - cfg.tau;
  const int m = F.space_dim();
  const int kcap = std::min({F.order(), max_order, 4});
  double max_abs = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    double t = start + span * i / (grid_points - 1);
    int ell = i % (kcap + 1);
    Vec x = random_vec(rng, m, -1.0, 1.0);
    TangentTuple w = random_tuple(rng, ell, m, 1.5);
    Vec v = F.jet(ell, Point{t, x}, w);
    for (int c = 0; c < v.size(); ++c) {
      max_abs = std::max(max_abs, std::abs(v[c]));
    }
  }
  return finish_report("vanishing", grid_points, max_abs, max_abs, 0.0,
                       max_abs);
}

PropertyReport check_linearity(const OperatorConfig& cfg, int cases,
                               std::uint64_t seed, double threshold) {
  auto rng = engine(seed);
  const int kcap = std::min(cfg.effective_k(), 4);
  double max_rel = 0.0, max_abs = 0.0;
  for (int s = 0; s < cases; ++s) {
    SmoothND pf = random_polynomial(rng(), 2, 4);
    SmoothND pg = random_polynomial(rng(), 2, 4);
    double alpha = uniform(rng, 0.25, 2.0) * (s % 2 == 0 ? 1.0 : -1.0);
    double beta = uniform(rng, 0.25, 2.0) * (s % 3 == 0 ? -1.0 : 1.0);
    auto f = halfline_source(pf, cfg.a, cfg.b, cfg.effective_k());
    auto g = halfline_source(pg, cfg.a, cfg.b, cfg.effective_k());
    auto fg = linear_combination(f, g, alpha, beta);
    auto F = extend(f, cfg);
    auto G = extend(g, cfg);
    auto FG = extend(fg, cfg);

    double t = uniform(rng, cfg.b, 2.0 * cfg.b - cfg.tau + 0.3);
    int ell = s % (kcap + 1);
    Vec x = random_vec(rng, 1, -1.0, 1.0);
    TangentTuple w = random_tuple(rng, ell, 1, 1.5);
    Point at{t, x};
    Vec lhs = FG.jet(ell, at, w);
    Vec va = F.jet(ell, at, w);
    Vec vb = G.jet(ell, at, w);
    for (int c = 0; c < lhs.size(); ++c) {
      double rhs = alpha * va[c] + beta * vb[c];
      double scale = std::max({1.0, std::abs(lhs[c]), std::abs(alpha * va[c]),
                               std::abs(beta * vb[c])});
      double diff = std::abs(lhs[c] - rhs);
      max_abs = std::max(max_abs, diff);
      max_rel = std::max(max_rel, diff / scale);
    }
  }
  return finish_report("linearity", cases, max_abs, max_rel, threshold,
                       max_rel);
}

PropertyReport check_compatibility(
    const ExtendedFunction& F, const ExtendedFunction& G, const Vec& x,
    const Vec& xbar, const std::function<Vec(const Vec&)>& upsilon, int d,
    int samples, std::uint64_t seed, double threshold) {
  if (d < 0 || d > std::min(F.order(), G.order())) {
    throw std::invalid_argument("check_compatibility: order out of range");
  }
  if (F.value_dim() != G.value_dim()) {
    throw std::invalid_argument("check_compatibility: value dimensions differ");
  }
  if (F.config().tau != G.config().tau || F.config().b != G.config().b) {
    throw std::invalid_argument("check_compatibility: frames differ");
  }
  auto rng = engine(seed);
  const auto& cfg = F.config();
  double max_abs = 0.0, max_rel = 0.0;
  for (int s = 0; s < samples; ++s) {
    double t = uniform(rng, cfg.tau, 2.0 * cfg.b - cfg.tau + 0.5);
    int ell = s % (d + 1);
    TangentTuple w = random_tuple(rng, ell, F.space_dim(), 1.5);
    TangentTuple wbar = w;
    if (upsilon) {
      for (auto& u : wbar) u.X = upsilon(u.X);
    }
    Vec va = F.jet(ell, Point{t, x}, w);
    Vec vb = G.jet(ell, Point{t, xbar}, wbar);
    for (int c = 0; c < va.size(); ++c) {
      double diff = std::abs(va[c] - vb[c]);
      max_abs = std::max(max_abs, diff);
      max_rel = std::max(max_rel, diff / std::max(1.0, std::abs(va[c])));
    }
  }
  return finish_report("compatibility", samples, max_abs, max_rel, threshold,
                       max_abs);
}

PropertyReport check_estimates(const ExtendedFunction& F,
                               const std::vector<Vec>& bounded_sample,
                               const Vec& x, int ell, int d, int samples,
                               std::uint64_t seed, bool zero_lambda) {
  if (ell < 0 || ell > d || d > F.order()) {
    throw std::invalid_argument("check_estimates: need 0 <= ell <= d <= k");
  }
  if (bounded_sample.empty()) {
    throw std::invalid_argument("check_estimates: empty bounded sample");
  }
  const auto& cfg = F.config();
  const int m = F.space_dim();
  for (const auto& X : bounded_sample) {
    if (X.size() != m) {
      throw std::invalid_argument("check_estimates: sample dimension mismatch");
    }
  }

  // Analytic constant: Sum |c_j| for order zero, otherwise
  // Q_d * max_l decay_sum(l) with Q_d = (d+1)*(d+1)!*M_d*max|I_{l,p}|.
  const auto& coeffs = F.coefficients();
  double C;
  if (ell == 0) {
    C = to_double(decay_sum(coeffs, 0));
  } else {
    double M = sup_constants(F.cutoff(), d).M_p;
    std::size_t counts = 1;
    for (int l = 1; l <= d; ++l) {
      for (int p = 0; p <= l; ++p) {
        counts = std::max(counts, enumerate_splits(l, p).size());
      }
    }
    double decay = 0.0;
    for (int l = 1; l <= d; ++l) {
      decay = std::max(decay, to_double(decay_sum(coeffs, l)));
    }
    C = (d + 1) * factorial(d + 1) * M * static_cast<double>(counts) * decay;
  }

  // Sup of the source jets over [tau, b] x {x} with directions drawn from
  // the time unit plus the bounded sample (sample only, in the sharpened
  // zero-lambda form).
  std::vector<Tangent> pool;
  if (!zero_lambda) pool.push_back(time_unit(m));
  for (const auto& X : bounded_sample) {
    Tangent u;
    u.lambda = 0.0;
    u.X = X;
    pool.push_back(std::move(u));
  }
  const int sup_order = ell == 0 ? 0 : d;
  const int tgrid = 201;
  double sup = 0.0;
  for (int lp = 0; lp <= sup_order; ++lp) {
    for_each_multiset(
        static_cast<int>(pool.size()), lp, [&](const std::vector<int>& pick) {
          TangentTuple w;
          w.reserve(lp);
          for (int i : pick) w.push_back(pool[i]);
          for (int g = 0; g < tgrid; ++g) {
            double t = cfg.tau + (cfg.b - cfg.tau) * g / (tgrid - 1);
            Vec v = F.source().jet(lp, Point{t, x}, w);
            for (int c = 0; c < v.size(); ++c) {
              sup = std::max(sup, std::abs(v[c]));
            }
          }
        });
  }

  auto rng = engine(seed);
  std::uniform_int_distribution<std::size_t> which(0, bounded_sample.size() - 1);
  double max_abs = 0.0, max_ratio = 0.0;
  for (int s = 0; s < samples; ++s) {
    double t = uniform(rng, cfg.b + 1e-9, 2.0 * cfg.b - cfg.tau);
    TangentTuple w;
    double lam = 1.0;
    for (int i = 0; i < ell; ++i) {
      Tangent u;
      u.lambda = zero_lambda ? 0.0 : uniform(rng, -2.0, 2.0);
      u.X = bounded_sample[which(rng)];
      lam = std::max(lam, std::abs(u.lambda));
      w.push_back(std::move(u));
    }
    Vec v = F.jet(ell, Point{t, x}, w);
    double measured = 0.0;
    for (int c = 0; c < v.size(); ++c) measured = std::max(measured, std::abs(v[c]));
    double bound = C * powi(lam, ell) * sup;
    double ratio;
    if (measured == 0.0) {
      ratio = 0.0;
    } else if (bound == 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    } else {
      ratio = measured / bound;
    }
    max_abs = std::max(max_abs, measured);
    max_ratio = std::max(max_ratio, ratio);
  }
  return finish_report(zero_lambda ? "estimate-sharpened" : "estimate",
                       samples, max_abs, max_ratio, 1.0, max_ratio);
}

namespace {

const double kNegInf = -std::numeric_limits<double>::infinity();

OperatorConfig default_config(int k) {
  OperatorConfig cfg;
  cfg.a = kNegInf;
  cfg.tau = -1.0;
  cfg.upsilon = -0.5;
  cfg.b = 0.0;
  cfg.k = k;
  return cfg;
}

PropertyReport check_moments(int k_max) {
  double worst = 0.0;
  int count = 0;
  for (int k = 0; k <= k_max; ++k) {
    auto coeffs = compute_coefficients(k);
    for (int q = 0; q <= k; ++q) {
      worst = std::max(worst, std::abs(to_double(verify_moments(coeffs, q))));
      ++count;
    }
    if (verify_moments(coeffs, k + 1) == 0) worst = std::max(worst, 1.0);
  }
  return finish_report("moment-cancellation", count, worst, worst, 0.0, worst);
}

PropertyReport check_reproduction(int k, std::uint64_t seed) {
  auto cfg = default_config(k);
  auto rng = engine(seed);
  double max_rel = 0.0;
  int count = 0;
  for (int q = 0; q <= k; ++q) {
    auto src = halfline_source(tf_t_power(q), cfg.a, cfg.b, k);
    auto F = extend(src, cfg);
    double tmax = -cfg.upsilon / std::ldexp(1.0, k);
    for (int i = 0; i < 8; ++i) {
      double t = uniform(rng, tmax * 1e-3, tmax);
      double got = F.value(t, Vec())[0];
      double want = powi(t, q);
      max_rel = std::max(max_rel, std::abs(got - want) / std::abs(want));
      ++count;
    }
  }
  return finish_report("power-reproduction", count, max_rel, max_rel, 1e-13,
                       max_rel);
}

std::vector<PropertyReport> run_tasks(
    std::vector<std::function<PropertyReport()>> tasks) {
  std::vector<PropertyReport> out(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < static_cast<int>(tasks.size()); ++i) {
    out[i] = tasks[i]();
  }
  return out;
}

std::vector<std::function<PropertyReport()>> boundary_tasks(std::uint64_t seed) {
  std::vector<std::function<PropertyReport()>> tasks;
  tasks.push_back([seed] {
    auto F = extend(halfline_source(tf_exp_cos(), kNegInf, 0.0, 4),
                    default_config(4));
    return check_boundary_match(F, 4, 24, seed, 1e-6);
  });
  tasks.push_back([seed] {
    auto F = extend(halfline_source(tf_t_power(4), kNegInf, 0.0, 4),
                    default_config(4));
    auto rep = check_boundary_match(F, 4, 12, seed + 1, 1e-9);
    rep.property = "boundary-match-powers";
    return rep;
  });
  tasks.push_back([seed] {
    auto F = extend(halfline_source(tf_exp_cos(), kNegInf, 0.0, 3),
                    default_config(3));
    return check_restriction(F, 200, seed + 2);
  });
  tasks.push_back([seed] {
    auto F = extend(halfline_source(tf_exp_cos(), kNegInf, 0.0, 3),
                    default_config(3));
    return check_vanishing(F, 10001, 3, seed + 3);
  });
  return tasks;
}

std::vector<std::function<PropertyReport()>> invariance_tasks(
    std::uint64_t seed) {
  std::vector<std::function<PropertyReport()>> tasks;
  tasks.push_back(
      [seed] { return check_linearity(default_config(4), 100, seed, 1e-12); });
  tasks.push_back([seed] {
    auto cfg = default_config(3);
    Vec x0 = Vec::Constant(1, 0.4);
    auto f = halfline_source(tf_exp_cos(), kNegInf, 0.0, 3);
    auto bump = halfline_source(tf_bump_cubic(0.4), kNegInf, 0.0, 3);
    auto F = extend(f, cfg);
    auto G = extend(linear_combination(f, bump, 1.0, 1.0), cfg);
    return check_compatibility(F, G, x0, x0, nullptr, 2, 80, seed + 1, 1e-12);
  });
  tasks.push_back([seed] {
    auto cfg = default_config(3);
    Vec x0 = Vec::Constant(1, 0.4);
    SmoothND base = tf_exp_cos();
    SmoothND scaled;
    scaled.dim = base.dim;
    scaled.value_dim = base.value_dim;
    scaled.partial = [base](const std::vector<int>& order, const Vec& y) {
      Vec z = y;
      int q = 0;
      for (std::size_t i = 1; i < order.size(); ++i) q += order[i];
      z[1] = y[1] / 2.0;
      Vec v = base.partial(order, z);
      return Vec(v * std::ldexp(1.0, -q));
    };
    auto F = extend(halfline_source(base, kNegInf, 0.0, 3), cfg);
    auto Fbar = extend(halfline_source(scaled, kNegInf, 0.0, 3), cfg);
    auto twice = [](const Vec& X) { return Vec(2.0 * X); };
    auto rep = check_compatibility(F, Fbar, x0, Vec(2.0 * x0), twice, 2, 80,
                                   seed + 2, 1e-12);
    rep.property = "compatibility-rescaled";
    return rep;
  });
  return tasks;
}

std::vector<std::function<PropertyReport()>> estimate_tasks(
    std::uint64_t seed) {
  std::vector<std::function<PropertyReport()>> tasks;
  for (auto [ell, d] : std::vector<std::pair<int, int>>{
           {0, 0}, {1, 1}, {2, 2}, {3, 3}, {1, 3}, {2, 3}}) {
    tasks.push_back([seed, ell = ell, d = d] {
      auto F = extend(halfline_source(tf_exp_cos(), kNegInf, 0.0, 3),
                      default_config(3));
      std::vector<Vec> bounded = {Vec::Constant(1, 0.7),
                                  Vec::Constant(1, -1.2),
                                  Vec::Constant(1, 0.3)};
      auto rep = check_estimates(F, bounded, Vec::Constant(1, 0.2), ell, d,
                                 160, seed + ell * 7 + d);
      rep.property = "estimate-l" + std::to_string(ell) + "-d" +
                     std::to_string(d);
      return rep;
    });
  }
  tasks.push_back([seed] {
    auto F = extend(halfline_source(tf_exp_cos(), kNegInf, 0.0, 3),
                    default_config(3));
    std::vector<Vec> bounded = {Vec::Constant(1, 0.7), Vec::Constant(1, -1.2)};
    return check_estimates(F, bounded, Vec::Constant(1, 0.2), 2, 3, 160,
                           seed + 40, true);
  });
  return tasks;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"smoke", "boundary", "invariance", "estimates", "full"};
}

std::vector<PropertyReport> run_suite(const std::string& name,
                                      std::uint64_t seed) {
  std::vector<std::function<PropertyReport()>> tasks;
  if (name == "smoke") {
    tasks.push_back([] { return check_moments(6); });
    tasks.push_back([seed] { return check_reproduction(3, seed); });
    tasks.push_back([seed] {
      auto F = extend(halfline_source(tf_exp_cos(), kNegInf, 0.0, 3),
                      default_config(3));
      return check_boundary_match(F, 3, 8, seed + 1, 1e-6);
    });
    tasks.push_back([seed] {
      auto F = extend(halfline_source(tf_exp_cos(), kNegInf, 0.0, 3),
                      default_config(3));
      return check_restriction(F, 60, seed + 2);
    });
    tasks.push_back([seed] {
      auto F = extend(halfline_source(tf_exp_cos(), kNegInf, 0.0, 3),
                      default_config(3));
      return check_vanishing(F, 1001, 2, seed + 3);
    });
    tasks.push_back(
        [seed] { return check_linearity(default_config(3), 10, seed + 4); });
  } else if (name == "boundary") {
    tasks = boundary_tasks(seed);
    tasks.push_back([] { return check_moments(12); });
    tasks.push_back([seed] { return check_reproduction(6, seed + 9); });
  } else if (name == "invariance") {
    tasks = invariance_tasks(seed);
  } else if (name == "estimates") {
    tasks = estimate_tasks(seed);
  } else if (name == "full") {
    tasks = boundary_tasks(seed);
    tasks.push_back([] { return check_moments(12); });
    tasks.push_back([seed] { return check_reproduction(6, seed + 9); });
    for (auto& t : invariance_tasks(seed + 100)) tasks.push_back(std::move(t));
    for (auto& t : estimate_tasks(seed + 200)) tasks.push_back(std::move(t));
  } else {
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  }
  return run_tasks(std::move(tasks));
}

}  // namespace seeley
