#pragma once

#include "seeley/coefficients.hpp"
#include "seeley/jets.hpp"
#include "seeley/smoothstep.hpp"

namespace seeley {

// Parameters of one extension operator instance. Normalized internally so
// the sum always runs in a frame with b = 0; kappa/kappa_prime configure the
// finite-a cutoff reduction and are required exactly when a is finite.
struct OperatorConfig {
  double a = -std::numeric_limits<double>::infinity();
  double tau = -1.0;
  double b = 0.0;
  double upsilon = -0.5;
  int k = 3;
  double kappa = std::numeric_limits<double>::quiet_NaN();
  double kappa_prime = std::numeric_limits<double>::quiet_NaN();
  int order_cap = kDefaultOrderCap;

  bool finite_a() const { return std::isfinite(a); }
  int effective_k() const { return effective_order(k, order_cap); }
  void validate() const;
};

// Smallest J such that -2^j * t <= tau for every j >= J, i.e. the number of
// reflection terms that can still see a nonzero cutoff at t. Exact integer
// scan on powers of two; no floating logarithm.
int truncation_index(double t, double tau);

// The primitives below work in the normalized frame (b = 0): f is defined on
// (-inf, 0] x space and t > 0 is the query.

// rho(d*t) * f(d*t, x). Returns zero without touching f when the cutoff has
// already died at d*t.
Vec gamma_eval(const BoundaryJetFunction& f, const SmoothStep& cutoff, double d, double t,
               const Vec& x);

// One (ell, q) block of the differentiated reflection sum: the double sum
// over p in [q, ell] and slot splits of
//   binom(p,q) * d^p * chi(w) * rho^(q)(d t) * jet_{ell-q}(space parts, units).
Vec lambda_lq(const BoundaryJetFunction& f, const SmoothStep& cutoff, double d, int ell, int q,
              const Point& at, const TangentTuple& w);

// Sum of lambda_lq over q = 0..ell: the full order-ell jet of one reflected
// and cutoff-multiplied copy of f.
Vec psi_ell(const BoundaryJetFunction& f, const SmoothStep& cutoff, double d, int ell,
            const Point& at, const TangentTuple& w);

struct Translation {
  double shift = 0.0;
  double to_internal(double t) const { return t - shift; }
  double to_external(double t) const { return t + shift; }
};

Translation translate_b(const OperatorConfig& config);

// The cutoff reduction for finite a: identically zero up to kappa, the
// original function from kappa_prime on, and the smoothstep-times-f Leibniz
// blend in between. Jets are exact through the step's derivative oracle.
BoundaryJetFunction reduce_finite_a(const BoundaryJetFunction& f, const OperatorConfig& config);

// The extension: delegates to the source for t <= b and evaluates the
// weighted reflection sum for t > b. Pure and immutable; safe to evaluate
// concurrently from many threads.
class ExtendedFunction {
 public:
  ExtendedFunction(BoundaryJetFunction source, OperatorConfig config);

  const OperatorConfig& config() const { return config_; }
  const SeeleyCoefficients& coefficients() const { return coeffs_; }
  const SmoothStep& cutoff() const { return cutoff_; }
  const BoundaryJetFunction& source() const { return source_; }
  int order() const { return order_k_; }
  int space_dim() const { return source_.domain.space_dim; }
  int value_dim() const { return source_.value_dim; }

  // Everything at or beyond this t is exactly zero.
  double vanish_from() const { return 2.0 * config_.b - config_.tau; }

  Vec jet(int ell, const Point& at, const TangentTuple& w) const;
  Vec value(double t, const Vec& x) const;

 private:
  OperatorConfig config_;
  int order_k_ = 0;
  BoundaryJetFunction source_;      // original frame, used for delegation
  BoundaryJetFunction sum_source_;  // normalized frame, reduced when a is finite
  SeeleyCoefficients coeffs_;
  SmoothStep cutoff_;
};

ExtendedFunction extend(const BoundaryJetFunction& f, const OperatorConfig& config);

Vec extended_jet(const ExtendedFunction& F, int ell, const Point& at, const TangentTuple& w);

}  // namespace seeley
