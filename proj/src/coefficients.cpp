#include "seeley/coefficients.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace seeley {

using boost::multiprecision::cpp_int;

int effective_order(int k, int cap) {
  if (cap < 0) throw std::invalid_argument("order cap must be >= 0");
  if (k < 0) return cap;
  return k;
}

namespace {

Rational node(int j) { return Rational(-(cpp_int(1) << j)); }

Rational rpow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

SeeleyCoefficients compute_coefficients(int k) {
  if (k < 0) {
    throw std::invalid_argument(
        "compute_coefficients: order must be >= 0 "
        "(map infinite requests through effective_order first)");
  }
  SeeleyCoefficients c;
  c.order_k = k;
  c.count_N = k + 1;
  c.weights.resize(c.count_N);
  // Lagrange weights for interpolating at the nodes -2^i and evaluating
  // at 1: c_j = prod_{i != j} (1 - x_i) / (x_j - x_i).
  for (int j = 0; j <= k; ++j) {
    Rational w = 1;
    for (int i = 0; i <= k; ++i) {
      if (i == j) continue;
      w *= (1 - node(i)) / (node(j) - node(i));
    }
    c.weights[j] = w;
  }
  c.shadow.resize(c.count_N);
  c.shadow_tail.resize(c.count_N);
  for (int j = 0; j <= k; ++j) {
    double hi = c.weights[j].convert_to<double>();
    c.shadow[j] = hi;
    c.shadow_tail[j] = Rational(c.weights[j] - Rational(hi)).convert_to<double>();
  }
  return c;
}

Rational verify_moments(const SeeleyCoefficients& coeffs, int q) {
  if (q < 0) throw std::invalid_argument("verify_moments: q must be >= 0");
  Rational s = 0;
  for (int j = 0; j < coeffs.count_N; ++j) {
    s += coeffs.weights[j] * rpow(node(j), q);
  }
  return s - 1;
}

Rational decay_sum(const SeeleyCoefficients& coeffs, int q) {
  if (q < 0) throw std::invalid_argument("decay_sum: q must be >= 0");
  Rational s = 0;
  for (int j = 0; j < coeffs.count_N; ++j) {
    s += abs(coeffs.weights[j]) * rpow(-node(j), q);
  }
  return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_string(const Rational& r) {
  std::ostringstream oss;
  oss << r;
  return oss.str();
}

std::string coefficients_json(const SeeleyCoefficients& coeffs) {
  nlohmann::json j;
  j["order_k"] = coeffs.order_k;
  j["count_N"] = coeffs.count_N;
  j["node_base"] = coeffs.node_base;
  nlohmann::json ws = nlohmann::json::array();
  for (int i = 0; i < coeffs.count_N; ++i) {
    nlohmann::json e;
    e["numerator"] = numerator(coeffs.weights[i]).str();
    e["denominator"] = denominator(coeffs.weights[i]).str();
    e["shadow"] = coeffs.shadow[i];
    ws.push_back(e);
  }
  j["weights"] = ws;
  return j.dump(2);
}

}  // namespace seeley
