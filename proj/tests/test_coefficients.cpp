#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "seeley/coefficients.hpp"

using seeley::Rational;
using seeley::SeeleyCoefficients;

namespace {

// Independent oracle: solve the (k+1)x(k+1) system sum_j c_j * (-2^j)^q = 1,
// q = 0..k, by exact Gaussian elimination with partial pivoting. Shares no
// code with the Lagrange-product construction under test.
std::vector<Rational> vandermonde_solve(int k) {
  const int n = k + 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int j = 0; j < n; ++j) {
    Rational node = -Rational(boost::multiprecision::cpp_int(1) << j);
    Rational power = 1;
    for (int q = 0; q < n; ++q) {
      m[q][j] = power;
      power *= node;
    }
  }
  for (int q = 0; q < n; ++q) m[q][n] = 1;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (abs(m[row][col]) > abs(m[pivot][col])) pivot = row;
    }
    std::swap(m[col], m[pivot]);
    REQUIRE(m[col][col] != 0);
    for (int row = col + 1; row < n; ++row) {
      Rational factor = m[row][col] / m[col][col];
      for (int c = col; c <= n; ++c) m[row][c] -= factor * m[col][c];
    }
  }
  std::vector<Rational> sol(n);
  for (int row = n - 1; row >= 0; --row) {
    Rational s = m[row][n];
    for (int c = row + 1; c < n; ++c) s -= m[row][c] * sol[c];
    sol[row] = s / m[row][row];
  }
  return sol;
}

}  // namespace

TEST_CASE("frozen weight values for small orders") {
  auto c0 = seeley::compute_coefficients(0);
  REQUIRE(c0.count_N == 1);
  CHECK(c0.weights[0] == 1);

  auto c1 = seeley::compute_coefficients(1);
  REQUIRE(c1.count_N == 2);
  CHECK(c1.weights[0] == 3);
  CHECK(c1.weights[1] == -2);

  auto c2 = seeley::compute_coefficients(2);
  REQUIRE(c2.count_N == 3);
  CHECK(c2.weights[0] == 5);
  CHECK(c2.weights[1] == -5);
  CHECK(c2.weights[2] == 1);

  auto c3 = seeley::compute_coefficients(3);
  REQUIRE(c3.count_N == 4);
  CHECK(c3.weights[0] == Rational(45, 7));
  CHECK(c3.weights[1] == Rational(-15, 2));
  CHECK(c3.weights[2] == Rational(9, 4));
  CHECK(c3.weights[3] == Rational(-5, 28));
}

TEST_CASE("moment residuals vanish up to the order and not beyond") {
  for (int k = 0; k <= 12; ++k) {
    auto c = seeley::compute_coefficients(k);
    for (int q = 0; q <= k; ++q) {
      CAPTURE(k);
      CAPTURE(q);
      CHECK(seeley::verify_moments(c, q) == 0);
    }
    CHECK(seeley::verify_moments(c, k + 1) != 0);
  }
}

TEST_CASE("frozen residual and decay values") {
  auto c1 = seeley::compute_coefficients(1);
  CHECK(seeley::verify_moments(c1, 2) == -6);
  CHECK(seeley::decay_sum(c1, 0) == 5);
  CHECK(seeley::decay_sum(c1, 1) == 7);

  auto c0 = seeley::compute_coefficients(0);
  CHECK(seeley::decay_sum(c0, 5) == 1);
}

TEST_CASE("Lagrange product matches independent Vandermonde solve") {
  for (int k = 0; k <= 12; ++k) {
    auto c = seeley::compute_coefficients(k);
    auto oracle = vandermonde_solve(k);
    REQUIRE(oracle.size() == c.weights.size());
    for (size_t j = 0; j < oracle.size(); ++j) {
      CAPTURE(k);
      CAPTURE(j);
      CHECK(c.weights[j] == oracle[j]);
    }
  }
}

TEST_CASE("weights alternate in sign starting positive") {
  for (int k = 0; k <= 12; ++k) {
    auto c = seeley::compute_coefficients(k);
    for (int j = 0; j <= k; ++j) {
      CAPTURE(k);
      CAPTURE(j);
      if (j % 2 == 0) {
        CHECK(c.weights[j] > 0);
      } else {
        CHECK(c.weights[j] < 0);
      }
    }
  }
}

TEST_CASE("floating shadow reconstructs the exact weight to double-double accuracy") {
  for (int k : {1, 4, 8, 12}) {
    auto c = seeley::compute_coefficients(k);
    for (int j = 0; j <= k; ++j) {
      Rational reconstructed = Rational(c.shadow[j]) + Rational(c.shadow_tail[j]);
      Rational err = abs(reconstructed - c.weights[j]) / abs(c.weights[j]);
      CHECK(err < Rational(1, boost::multiprecision::cpp_int(1) << 100));
    }
  }
}

TEST_CASE("infinite smoothness requests are capped") {
  CHECK(seeley::effective_order(3) == 3);
  CHECK(seeley::effective_order(12) == 12);
  CHECK(seeley::effective_order(seeley::kOrderInfinity) == seeley::kDefaultOrderCap);
  CHECK(seeley::effective_order(seeley::kOrderInfinity, 5) == 5);
  CHECK_THROWS_AS((void)seeley::compute_coefficients(-1), std::invalid_argument);
}

TEST_CASE("json serialization carries exact numerators and denominators") {
  auto c = seeley::compute_coefficients(3);
  std::string j = seeley::coefficients_json(c);
  CHECK(j.find("\"45\"") != std::string::npos);
  CHECK(j.find("\"7\"") != std::string::npos);
  CHECK(j.find("\"-5\"") != std::string::npos);
  CHECK(j.find("\"28\"") != std::string::npos);
  CHECK(j.find("order_k") != std::string::npos);
}
