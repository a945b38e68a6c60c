#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "trib/exact_int.hpp"

// Fast evaluation of the repeated-square count B(n) and repeated-cube count
// D(n) for arbitrary n.
//
// The positions >= 8 are tiled by square segments
//   Gamma_{3,4}, Gamma_{2,4}, Gamma_{1,4}, Gamma_{3,5}, Gamma_{2,5}, ...
// and the positions >= 52 by cube segments Gamma_7, Gamma_8, .... The vector
// of per-position counts on each segment is the concatenation of three
// lower-order segment vectors (shifted by t_{m-1}) plus a block of +1s. This
// turns a point query b(n)/d(n) into an O(m) descent and a prefix sum B(n)/D(n)
// into an O(m) descent plus cached closed-form segment sums.

namespace trib {

/// Positions <= this are answered from the explicit square base table.
inline constexpr ExactInt kSquareBaseLimit = 51;
/// Positions <= this are answered from the explicit cube base table.
inline constexpr ExactInt kCubeBaseLimit = 325;

/// Which of the three square segments attached to K_m. Positionally the
/// segments appear in the order third, second, first.
enum class SquareCase : int { first = 1, second = 2, third = 3 };

int index(SquareCase j);
SquareCase square_case(int j);  // throws std::out_of_range unless j in {1,2,3}

/// Gamma_{j,m,1}: an inclusive run of positions plus the split points used by
/// the descent.
struct SquareGamma {
  SquareCase j = SquareCase::first;
  int m = 0;
  ExactInt lo = 0;
  ExactInt hi = 0;

  /// False for the base segments whose contents are given explicitly
  /// (j=1: m<5, j=2: m<6, j=3: m<7). The fields below are then zero.
  bool has_children = false;
  int child_order = 0;     // m-1, m-2 or m-3
  ExactInt shift = 0;      // t_{m-1}; position n maps to n - shift in the child
  ExactInt second_child = 0;  // first position mapped into Gamma_{2,child}
  ExactInt third_child = 0;   // first position mapped into Gamma_{1,child}
  /// Edge of the +1 block: for j=3 the block is [lo, edge), otherwise [edge, hi].
  ExactInt increment_edge = 0;

  static SquareGamma make(SquareCase j, int m);

  ExactInt size() const { return hi - lo + 1; }
  bool contains(ExactInt n) const { return lo <= n && n <= hi; }
  bool in_increment(ExactInt n) const;
};

/// Gamma_{m,1}, m >= 7.
struct CubeGamma {
  int m = 0;
  ExactInt lo = 0;
  ExactInt hi = 0;
  /// The +1 block is [increment_lo, increment_end).
  ExactInt increment_lo = 0;
  ExactInt increment_end = 0;

  bool has_children = false;  // m >= 10
  ExactInt shift = 0;         // t_{m-1}
  ExactInt second_child = 0;  // first position mapped into Gamma_{m-2}
  ExactInt third_child = 0;   // first position mapped into Gamma_{m-1}

  static CubeGamma make(int m);

  ExactInt size() const { return hi - lo + 1; }
  bool contains(ExactInt n) const { return lo <= n && n <= hi; }
  bool in_increment(ExactInt n) const { return increment_lo <= n && n < increment_end; }
};

/// b(i) for i in [0, 51] and d(i) for i in [0, 325] (index 0 unused, zero),
/// with their prefix sums.
struct BaseTables {
  std::vector<ExactInt> b_small;
  std::vector<ExactInt> d_small;
  std::vector<ExactInt> b_prefix;
  std::vector<ExactInt> d_prefix;

  static const BaseTables& standard();
};

// Closed-form segment sums and cumulative values. Squares need m >= 4, cubes
// m >= 7; all accept m <= kMaxFormulaOrder.
ExactInt sum_b_gamma(SquareCase j, int m);
ExactInt phi(int m);
ExactInt b_cum_at_gamma_max(SquareCase j, int m);
ExactInt sum_d_gamma(int m);
ExactInt d_cum_at_gamma_max(int m);

/// b over Gamma_{j,m,1}, built by the vector recursion from the base table.
/// Size grows as t_{m-2}; intended for m <= ~20.
std::vector<ExactInt> materialize_b(SquareCase j, int m);
/// d over Gamma_{m,1}.
std::vector<ExactInt> materialize_d(int m);

/// Compares every closed-form segment sum and cumulative value against
/// direct summation of materialized vectors (squares m <= 12, cubes m <= 13),
/// and checks threshold ordering. Returns one message per mismatch.
std::vector<std::string> run_self_test();

class FastCounter {
 public:
  FastCounter();
  ~FastCounter();
  FastCounter(const FastCounter&) = delete;
  FastCounter& operator=(const FastCounter&) = delete;

  static const FastCounter& standard();

  /// Number of square occurrences ending exactly at n.
  ExactInt b_at(ExactInt n) const;
  /// B(n), 0 <= n <= kNCap.
  ExactInt algorithm_B(ExactInt n) const;
  /// Number of cube occurrences ending exactly at n.
  ExactInt d_at(ExactInt n) const;
  /// D(n), 0 <= n <= kNCap.
  ExactInt algorithm_D(ExactInt n) const;

  /// Square segment containing n (n >= 8).
  const SquareGamma& locate_square(ExactInt n) const;
  /// Cube segment containing n (n >= 52).
  const CubeGamma& locate_cube(ExactInt n) const;

  /// Cached Gamma_{j,m,1}, Sigma b and B(max) for orders covering [8, kNCap].
  const SquareGamma& square_gamma(SquareCase j, int m) const;
  ExactInt segment_sum(SquareCase j, int m) const;
  ExactInt cumulative_at_max(SquareCase j, int m) const;
  const CubeGamma& cube_gamma(int m) const;
  ExactInt cube_segment_sum(int m) const;
  ExactInt cube_cumulative_at_max(int m) const;

  int max_square_order() const;
  int max_cube_order() const;

 private:
  struct Tables;
  const Tables& tables() const;

  mutable std::once_flag once_;
  mutable std::unique_ptr<Tables> tables_;
};

}  // namespace trib
