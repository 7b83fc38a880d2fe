#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace seeley {

using Rational = boost::multiprecision::cpp_rational;

// Sentinel for "extend with unlimited smoothness"; mapped to a finite order
// by effective_order before any coefficients are built.
inline constexpr int kOrderInfinity = -1;
inline constexpr int kDefaultOrderCap = 8;

int effective_order(int k, int cap = kDefaultOrderCap);

// Weight sequence c_0..c_{N-1} for reflection nodes -2^j. The moment
// conditions sum_j c_j * (-2^j)^q = 1 hold exactly for all 0 <= q <= order_k.
struct SeeleyCoefficients {
  int order_k = 0;
  int count_N = 1;
  int node_base = 2;
  std::vector<Rational> weights;
  // Nearest-double copy of each weight plus the rounding residue, so hot
  // loops can run a compensated (double-double) accumulation without any
  // rational arithmetic.
  std::vector<double> shadow;
  std::vector<double> shadow_tail;
};

SeeleyCoefficients compute_coefficients(int k);

// sum_j c_j * (-2^j)^q - 1, exact. Zero iff q <= order_k (or by accident).
Rational verify_moments(const SeeleyCoefficients& coeffs, int q);

// sum_j |c_j| * (2^j)^q, exact. Finite by construction of the truncation.
Rational decay_sum(const SeeleyCoefficients& coeffs, int q);

double to_double(const Rational& r);
std::string rational_string(const Rational& r);

// Serialized form: exact numerator/denominator strings plus the shadow.
std::string coefficients_json(const SeeleyCoefficients& coeffs);

}  // namespace seeley
