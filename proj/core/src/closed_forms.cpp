#include "trib/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "trib/word.hpp"

namespace trib {

namespace {

ExactInt t(int m) { return trib_number(m); }

void check_length(ExactInt n, const char* what) {
  if (n < 0 || n > kNCap) {
    throw std::out_of_range(std::string(what) + ": n = " + to_string(n) + " out of range");
  }
}

void check_order(int m, int lo, const char* what) {
  if (m < lo || m > kMaxFormulaOrder) {
    throw std::out_of_range(std::string(what) + ": order " + std::to_string(m) + " out of range");
  }
}

// Order m >= 4 with alpha_m <= n < alpha_{m+1}, for n >= 14.
int square_order(ExactInt n) {
  int m = 4;
  while (2 * t(m) <= n) ++m;
  return m;
}

// Order m >= 7 with alpha^_m <= n < alpha^_{m+1}, for n >= 58.
int cube_order(ExactInt n) {
  int m = 7;
  while (t(m) + 2 * t(m - 3) <= n) ++m;
  return m;
}

}  // namespace

SquareBoundaries SquareBoundaries::at(int m) {
  check_order(m, 4, "SquareBoundaries");
  SquareBoundaries s;
  s.m = m;
  s.alpha = 2 * t(m - 1);
  s.beta = t(m) + 2 * t(m - 3) - 1;
  s.gamma = 2 * t(m) - t(m - 1);
  s.theta = exact_div(3 * t(m) + t(m - 2) - 3, 2, "theta_m");
  return s;
}

CubeBoundaries CubeBoundaries::at(int m) {
  check_order(m, 7, "CubeBoundaries");
  CubeBoundaries c;
  c.m = m;
  c.alpha = t(m - 1) + 2 * t(m - 4);
  c.beta = exact_div(3 * t(m - 1) - t(m - 3) - 3, 2, "beta^_m");
  return c;
}

ExactInt distinct_squares(ExactInt n) {
  check_length(n, "distinct_squares");
  if (n <= 7) return 0;
  if (n <= 9) return 1;
  if (n <= 13) return 2;
  const int m = square_order(n);
  const SquareBoundaries s = SquareBoundaries::at(m);
  if (n < s.beta) {
    return n - exact_div(t(m) + t(m - 3) + m + 3, 2, "A(n) first branch");
  }
  if (n < s.gamma) {
    return exact_div(t(m - 1) + t(m - 2) + 4 * t(m - 3) - m - 5, 2, "A(n) second branch");
  }
  if (n < s.theta) {
    return n - exact_div(t(m - 1) + 3 * t(m - 2) + m + 3, 2, "A(n) third branch");
  }
  return exact_div(2 * t(m - 1) + t(m - 2) + 3 * t(m - 3) - m - 6, 2, "A(n) fourth branch");
}

int a_indicator(ExactInt n) {
  check_length(n, "a_indicator");
  if (n < 1) throw std::out_of_range("a_indicator: n must be >= 1");
  if (n < 14) return (n == 8 || n == 10) ? 1 : 0;
  const SquareBoundaries s = SquareBoundaries::at(square_order(n));
  return ((s.alpha <= n && n <= s.beta) || (s.gamma <= n && n <= s.theta)) ? 1 : 0;
}

ExactInt distinct_squares_at_t(int m) {
  check_order(m, 0, "distinct_squares_at_t");
  if (m <= 2) return 0;
  return exact_div(2 * t(m - 2) + t(m - 3) + 3 * t(m - 4) - m - 5, 2, "A(t_m)");
}

ExactInt glen_distinct_squares_at_t(int m) {
  check_order(m, 3, "glen_distinct_squares_at_t");
  const auto d = [](int i) -> ExactInt {
    if (i <= -1) return -1;
    if (i == 0) return 0;
    return exact_div(t(i + 1) + t(i - 1) - 3, 2, "d_i");
  };
  // The d_i form indexes blocks one order later.
  const int g = m - 1;
  ExactInt sum = 0;
  for (int i = 0; i <= g - 2; ++i) sum += d(i) + 1;
  return sum + d(g - 4) + d(g - 5) + 1;
}

ExactInt distinct_cubes(ExactInt n) {
  check_length(n, "distinct_cubes");
  if (n <= 57) return 0;
  const int m = cube_order(n);
  const CubeBoundaries c = CubeBoundaries::at(m);
  if (n <= c.beta) {
    return n - exact_div(4 * t(m - 1) - t(m - 2) - 3 * t(m - 3) + m - 6, 2, "C(n) first branch");
  }
  return exact_div(t(m - 5) + t(m - 6) - m + 3, 2, "C(n) second branch");
}

int c_indicator(ExactInt n) {
  check_length(n, "c_indicator");
  if (n < 1) throw std::out_of_range("c_indicator: n must be >= 1");
  if (n <= 57) return 0;
  const int m = cube_order(n);
  return n <= t(m - 1) + kernel_number(m + 1) - 2 ? 1 : 0;
}

ExactInt distinct_cubes_at_t(int m) {
  check_order(m, 0, "distinct_cubes_at_t");
  if (m <= 6) return 0;
  return exact_div(t(m - 5) + t(m - 6) - m + 3, 2, "C(t_m)");
}

ExactInt repeated_squares_at_t(int m) {
  check_order(m, 3, "repeated_squares_at_t");
  // m/22 (9t_m - t_{m-1} - 5t_{m-2}) + 1/44 (-81t_m + 26t_{m-1} + 13t_{m-2}) + m + 1/4
  const ExactInt num = 2 * m * (9 * t(m) - t(m - 1) - 5 * t(m - 2)) +
                       (-81 * t(m) + 26 * t(m - 1) + 13 * t(m - 2)) + 44 * m + 11;
  return exact_div(num, 44, "B(t_m)");
}

ExactInt repeated_cubes_at_t(int m) {
  check_order(m, 3, "repeated_cubes_at_t");
  // m/22 (-6t_m + 8t_{m-1} + 7t_{m-2}) + 1/44 (-23t_m + 34t_{m-1} - 5t_{m-2}) + m/6
  //   - 1/4 [m = 0 mod 3] + 1/12 [m = 1 mod 3] + 5/12 [m = 2 mod 3]
  static constexpr ExactInt kResidueTerm[3] = {-33, 11, 55};
  const ExactInt num = 6 * m * (-6 * t(m) + 8 * t(m - 1) + 7 * t(m - 2)) +
                       3 * (-23 * t(m) + 34 * t(m - 1) - 5 * t(m - 2)) + 22 * m +
                       kResidueTerm[m % 3];
  return exact_div(num, 132, "D(t_m)");
}

}  // namespace trib
