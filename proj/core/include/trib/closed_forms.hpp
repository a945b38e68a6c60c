#pragma once

#include "trib/exact_int.hpp"

// Exact evaluators for the distinct-square count A(n), the distinct-cube count
// C(n), their per-position indicators, and the values A, B, C, D take at the
// Tribonacci numbers t_m. Every rational coefficient is cleared to a common
// denominator and divided once with a remainder check.

namespace trib {

/// Largest order accepted by the order-indexed evaluators.
inline constexpr int kMaxFormulaOrder = 100;

/// Branch boundaries of the piecewise distinct-square formula, m >= 4.
struct SquareBoundaries {
  int m = 0;
  ExactInt alpha = 0;  // 2 t_{m-1}
  ExactInt beta = 0;   // t_m + 2 t_{m-3} - 1
  ExactInt gamma = 0;  // 2 t_m - t_{m-1}
  ExactInt theta = 0;  // (3 t_m + t_{m-2} - 3) / 2

  static SquareBoundaries at(int m);
};

/// Boundaries of the distinct-cube formula, m >= 7: the run of positions
/// [alpha, beta] where a new distinct cube ends.
struct CubeBoundaries {
  int m = 0;
  ExactInt alpha = 0;  // t_{m-1} + 2 t_{m-4}
  ExactInt beta = 0;   // (3 t_{m-1} - t_{m-3} - 3) / 2

  static CubeBoundaries at(int m);
};

/// A(n): number of distinct squares in the prefix of length n.
ExactInt distinct_squares(ExactInt n);

/// a(n): 1 iff a new distinct square ends exactly at position n.
int a_indicator(ExactInt n);

/// A(t_m), m >= 0.
ExactInt distinct_squares_at_t(int m);

/// A(t_m) through the independent d_i summation form, m >= 3.
ExactInt glen_distinct_squares_at_t(int m);

/// C(n): number of distinct cubes in the prefix of length n.
ExactInt distinct_cubes(ExactInt n);

/// c(n): 1 iff a new distinct cube ends exactly at position n.
int c_indicator(ExactInt n);

/// C(t_m), m >= 0.
ExactInt distinct_cubes_at_t(int m);

/// B(t_m), m >= 3.
ExactInt repeated_squares_at_t(int m);

/// D(t_m), m >= 3.
ExactInt repeated_cubes_at_t(int m);

}  // namespace trib
