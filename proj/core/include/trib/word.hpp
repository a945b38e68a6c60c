#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trib/exact_int.hpp"

namespace trib {

enum class Letter : std::uint8_t { a, b, c };

char to_char(Letter letter);
Letter letter_from_char(char ch);  // throws std::invalid_argument

/// A finite word over {a,b,c}, stored as its characters. Positions in the
/// public API are 1-based; Word itself is an ordinary 0-based string.
using Word = std::string;

struct LetterCounts {
  ExactInt a = 0;
  ExactInt b = 0;
  ExactInt c = 0;

  ExactInt total() const { return a + b + c; }
  ExactInt operator[](Letter letter) const;
  LetterCounts& operator+=(const LetterCounts& other);
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

/// Block T_m = sigma^m(a): its length t_m, letter counts and last letter.
struct Block {
  int order = 0;
  ExactInt length = 0;
  LetterCounts counts;
  Letter last = Letter::a;
};

struct KernelWord {
  int order = 0;
  Word content;
  ExactInt length = 0;
};

inline constexpr std::size_t kDefaultPrefixCap = 10'000'000;

/// Immutable table of blocks T_{-2}, T_{-1}, ... covering every prefix length
/// up to n_cap (plus a few orders of headroom for formulas that look one
/// block ahead).
class BlockTable {
 public:
  explicit BlockTable(ExactInt n_cap = kNCap);

  /// Shared table for kNCap, built on first use.
  static const BlockTable& standard();

  ExactInt n_cap() const { return n_cap_; }
  int min_order() const { return -2; }
  int max_order() const { return static_cast<int>(blocks_.size()) - 3; }
  const Block& at(int m) const;

  /// Smallest m >= 1 with t_m >= n.
  int covering_order(ExactInt n) const;

 private:
  ExactInt n_cap_;
  std::vector<Block> blocks_;
};

/// t_m for m >= -2. Throws std::out_of_range for m < -2 or when t_m does not
/// fit in ExactInt.
ExactInt trib_number(int m);

/// Kernel number k_m for m >= 0.
ExactInt kernel_number(int m);

/// delta_m, the last letter of T_m (m >= -1).
Letter last_letter(int m);

/// K_m for m >= 1. Throws std::out_of_range when k_m exceeds `cap`.
KernelWord kernel_word(int m, std::size_t cap = kDefaultPrefixCap);

/// The n-th letter of the Tribonacci word, 1 <= n <= kNCap. O(log n).
Letter letter_at(ExactInt n);

/// Prefix of length n, materialized. Throws std::out_of_range when n > cap.
Word prefix(ExactInt n, std::size_t cap = kDefaultPrefixCap);

/// Letter counts of the prefix of length n, 0 <= n <= kNCap. O(log n).
LetterCounts letter_counts(ExactInt n);

/// Position of the p-th occurrence of a letter.
ExactInt position_letter(Letter letter, ExactInt p);

/// End position of the p-th occurrence of the kernel word K_m.
ExactInt position_kernel(int m, ExactInt p);

}  // namespace trib
