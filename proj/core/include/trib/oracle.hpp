#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trib/exact_int.hpp"
#include "trib/word.hpp"

// Brute-force ground truth over a materialized prefix. Nothing here calls the
// closed forms or the fast counters; the word itself is generated by iterating
// the substitution a->ab, b->ac, c->a directly.

namespace trib {

struct OccurrenceRecord {
  ExactInt end_pos = 0;
  ExactInt root_len = 0;
  int power = 2;  // 2 = square, 3 = cube
  bool is_new_distinct = false;
};

struct RepetitionSummary {
  ExactInt n = 0;
  ExactInt distinct_squares = 0;
  ExactInt repeated_squares = 0;
  ExactInt distinct_cubes = 0;
  ExactInt repeated_cubes = 0;
  // Per-position counts, index 1..n (index 0 unused).
  std::vector<int> a, b, c, d;
  // Every square and cube occurrence, ordered by end position then root length.
  std::vector<OccurrenceRecord> occurrences;
};

enum class ScanMode {
  restricted,  // root lengths t_m, t_m + t_{m-1} (squares) and t_m (cubes)
  exhaustive,  // every root length
};

/// Violations found by an exhaustive validation pass; all zero means clean.
struct ExhaustiveReport {
  std::size_t n = 0;
  std::size_t restricted_mismatches = 0;  // restricted scan != exhaustive scan
  std::size_t bad_square_lengths = 0;     // square length not 2t_m or 2t_m+2t_{m-1}
  std::size_t bad_cube_lengths = 0;       // cube length not 3t_m
  std::size_t fourth_powers = 0;
  std::size_t imprimitive_roots = 0;

  bool clean() const {
    return restricted_mismatches == 0 && bad_square_lengths == 0 && bad_cube_lengths == 0 &&
           fourth_powers == 0 && imprimitive_roots == 0;
  }
};

/// Gaps between consecutive occurrences of a factor. `lengths[p-1]` is
/// |G_p| (negative when the occurrences overlap); `coded` maps each gap to
/// 'a', 'b', 'c' according to whether it equals G_1, G_2 or G_4.
struct GapPattern {
  std::vector<ExactInt> lengths;
  Word coded;
  /// coded is a prefix of the Tribonacci word.
  bool matches_word = false;
  std::size_t distinct_gaps = 0;
};

class Oracle {
 public:
  static constexpr std::size_t kDefaultCap = 5000;
  static constexpr std::size_t kExhaustiveCap = 600;

  explicit Oracle(std::size_t cap = kDefaultCap);

  std::size_t cap() const { return cap_; }
  /// The materialized prefix, length cap().
  const Word& text() const { return text_; }

  RepetitionSummary scan_repetitions(std::size_t n, ScanMode mode = ScanMode::restricted) const;

  /// End positions (1-based, ascending) of w in the prefix of length n.
  std::vector<ExactInt> occurrences(const Word& w, std::size_t n) const;

  /// Requires at least five occurrences of w in the prefix of length n.
  GapPattern gap_pattern(const Word& w, std::size_t n) const;

  /// Order of the largest kernel word occurring in w. Throws
  /// std::invalid_argument if w is not a factor of the prefix.
  int kernel_of(const Word& w) const;

  /// Roots of every square ending at 1-based position e (all root lengths).
  std::vector<Word> square_roots_ending_at(std::size_t e) const;

  bool assert_no_fourth_powers(std::size_t n) const;

  ExhaustiveReport validate_exhaustive(std::size_t n) const;

 private:
  void check_n(std::size_t n) const;

  std::size_t cap_;
  Word text_;
};

/// Word generated by iterating the substitution; independent of the block
/// recursion in word.hpp.
Word substitution_prefix(std::size_t n);

/// True iff w is not a proper power of a shorter word.
bool is_primitive(std::string_view w);

}  // namespace trib
