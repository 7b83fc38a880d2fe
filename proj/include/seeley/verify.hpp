#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "seeley/halfline.hpp"
#include "seeley/jets.hpp"

namespace seeley {

// Directional finite differences. Central tensor stencils with one Richardson
// level; the base step widens with the order so the roundoff amplification
// 2^order * eps / (2h)^order stays below the per-order tolerance.
struct FDJetOracle {
  double h_low = 1e-4;
  double h_mid = 1e-3;
  double h_high = 1e-2;
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  int max_order = 4;

  double step_for(int order) const;
};

struct FDValue {
  double value = 0.0;
  double error = 0.0;
};

// Iterated directional central difference of order w.size() == order, with
// Richardson extrapolation across steps h and h/2. The error field bounds the
// distance to the true derivative for functions analytic near the stencil.
FDValue fd_jet(const std::function<double(const Point&)>& fun, const Point& at,
               const TangentTuple& w, int order,
               const FDJetOracle& oracle = {});

// Limit of fun(t) as t decreases to b, extrapolated from the geometric nodes
// t = b + 2^-r, r in [r_lo, r_hi].
FDValue one_sided_limit(const std::function<double(double)>& fun, double b,
                        int r_lo = 5, int r_hi = 20);

struct PropertyReport {
  std::string property;
  int samples = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  double threshold = 0.0;
  double discrepancy = 0.0;
  bool pass = false;
};

// Sets pass exactly when discrepancy <= threshold.
PropertyReport finish_report(std::string property, int samples, double max_abs,
                             double max_rel, double threshold,
                             double discrepancy);

nlohmann::json report_json(const PropertyReport& report);
nlohmann::json report_json(const std::vector<PropertyReport>& reports);
bool all_pass(const std::vector<PropertyReport>& reports);

// Compares one-sided limits of the extended jets toward t = b against the
// source jets at b, for all orders <= max_order <= min(k, 4). The limits are
// taken along the dyadic nodes of one_sided_limit, starting deep enough that
// every cutoff factor in the sum is constant.
PropertyReport check_boundary_match(const ExtendedFunction& F, int max_order,
                                    int tuple_samples, std::uint64_t seed,
                                    double threshold = 1e-6);

// Random queries with t <= b must reproduce the source jets bitwise.
PropertyReport check_restriction(const ExtendedFunction& F, int samples,
                                 std::uint64_t seed);

// Values and jets on a grid of t >= 2b - tau must be exactly zero.
PropertyReport check_vanishing(const ExtendedFunction& F, int grid_points,
                               int max_order, std::uint64_t seed);

// Extends random polynomial pairs f, g and checks that the extension of
// alpha*f + beta*g matches the combination of the extensions.
PropertyReport check_linearity(const OperatorConfig& cfg, int cases,
                               std::uint64_t seed, double threshold = 1e-12);

// Verifies that extensions of sources with matching jets along [tau, b] x {x}
// keep matching for t > b. The comparison maps space directions through
// upsilon (identity when null) and compares jets of order <= d at x vs xbar.
PropertyReport check_compatibility(
    const ExtendedFunction& F, const ExtendedFunction& G, const Vec& x,
    const Vec& xbar, const std::function<Vec(const Vec&)>& upsilon, int d,
    int samples, std::uint64_t seed, double threshold = 1e-12);

// Measures |jet of order ell| at random points t > b against the analytic
// bound C_d * max(1, |lambda|_inf)^ell * sup of the source jets over
// [tau, b] x {x} with directions from the time unit and the bounded sample.
// The report's max_rel is the worst measured/analytic ratio; threshold 1.
// With zero_lambda the tuples carry no time component and the sup skips the
// time unit, which is the sharpened form of the bound.
PropertyReport check_estimates(const ExtendedFunction& F,
                               const std::vector<Vec>& bounded_sample,
                               const Vec& x, int ell, int d, int samples,
                               std::uint64_t seed, bool zero_lambda = false);

std::vector<std::string> suite_names();
std::vector<PropertyReport> run_suite(const std::string& name,
                                      std::uint64_t seed);

}  // namespace seeley
