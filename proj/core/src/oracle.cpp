#include "trib/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <utility>

namespace trib {

namespace {

// Root lengths a square can have: t_m and t_m + t_{m-1}, m >= 0.
std::vector<std::size_t> square_root_lengths(std::size_t max_len) {
  std::set<std::size_t> lengths;
  for (int m = 0; trib_number(m) <= static_cast<ExactInt>(max_len); ++m) {
    lengths.insert(static_cast<std::size_t>(trib_number(m)));
    const ExactInt longer = trib_number(m) + trib_number(m - 1);
    if (longer <= static_cast<ExactInt>(max_len)) lengths.insert(static_cast<std::size_t>(longer));
  }
  return {lengths.begin(), lengths.end()};
}

std::vector<std::size_t> cube_root_lengths(std::size_t max_len) {
  std::vector<std::size_t> lengths;
  for (int m = 0; trib_number(m) <= static_cast<ExactInt>(max_len); ++m) {
    const auto len = static_cast<std::size_t>(trib_number(m));
    if (lengths.empty() || lengths.back() != len) lengths.push_back(len);
  }
  return lengths;
}

std::vector<std::size_t> all_lengths(std::size_t max_len) {
  std::vector<std::size_t> lengths(max_len);
  for (std::size_t i = 0; i < max_len; ++i) lengths[i] = i + 1;
  return lengths;
}

// `power` equal blocks of length len ending just before 0-based offset end.
bool is_power_ending(std::string_view text, std::size_t end, std::size_t len, int power) {
  const std::size_t total = len * static_cast<std::size_t>(power);
  if (total > end) return false;
  const std::size_t start = end - total;
  for (int block = 1; block < power; ++block) {
    if (text.compare(start + static_cast<std::size_t>(block) * len, len, text.substr(start, len)) != 0) {
      return false;
    }
  }
  return true;
}

using OccurrenceKey = std::pair<ExactInt, ExactInt>;  // (end, root_len) keyed by power

bool length_in(const std::set<ExactInt>& allowed, ExactInt len) { return allowed.count(len) != 0; }

}  // namespace

Word substitution_prefix(std::size_t n) {
  Word w = "a";
  while (w.size() < n) {
    Word next;
    next.reserve(w.size() * 2);
    for (char ch : w) {
      switch (ch) {
        case 'a': next += "ab"; break;
        case 'b': next += "ac"; break;
        default: next += 'a'; break;
      }
    }
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

bool is_primitive(std::string_view w) {
  if (w.empty()) return false;
  const std::string doubled = std::string(w) + std::string(w);
  return doubled.find(w, 1) == w.size();
}

Oracle::Oracle(std::size_t cap) : cap_(cap), text_(substitution_prefix(cap)) {}

void Oracle::check_n(std::size_t n) const {
  if (n > cap_) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds oracle cap " +
                            std::to_string(cap_));
  }
}

RepetitionSummary Oracle::scan_repetitions(std::size_t n, ScanMode mode) const {
  check_n(n);
  if (mode == ScanMode::exhaustive && n > kExhaustiveCap) {
    throw std::out_of_range("exhaustive scan limited to n <= " + std::to_string(kExhaustiveCap));
  }
  const std::string_view text(text_.data(), n);
  const auto square_lengths =
      mode == ScanMode::exhaustive ? all_lengths(n / 2) : square_root_lengths(n / 2);
  const auto cube_lengths =
      mode == ScanMode::exhaustive ? all_lengths(n / 3) : cube_root_lengths(n / 3);

  RepetitionSummary summary;
  summary.n = static_cast<ExactInt>(n);
  summary.a.assign(n + 1, 0);
  summary.b.assign(n + 1, 0);
  summary.c.assign(n + 1, 0);
  summary.d.assign(n + 1, 0);

  std::unordered_set<std::string_view> seen_squares, seen_cubes;
  for (std::size_t end = 1; end <= n; ++end) {
    for (std::size_t len : square_lengths) {
      if (2 * len > end) break;
      if (!is_power_ending(text, end, len, 2)) continue;
      const bool fresh = seen_squares.insert(text.substr(end - 2 * len, 2 * len)).second;
      ++summary.b[end];
      if (fresh) ++summary.a[end];
      summary.occurrences.push_back(
          {static_cast<ExactInt>(end), static_cast<ExactInt>(len), 2, fresh});
    }
    for (std::size_t len : cube_lengths) {
      if (3 * len > end) break;
      if (!is_power_ending(text, end, len, 3)) continue;
      const bool fresh = seen_cubes.insert(text.substr(end - 3 * len, 3 * len)).second;
      ++summary.d[end];
      if (fresh) ++summary.c[end];
      summary.occurrences.push_back(
          {static_cast<ExactInt>(end), static_cast<ExactInt>(len), 3, fresh});
    }
    summary.distinct_squares += summary.a[end];
    summary.repeated_squares += summary.b[end];
    summary.distinct_cubes += summary.c[end];
    summary.repeated_cubes += summary.d[end];
  }
  return summary;
}

std::vector<ExactInt> Oracle::occurrences(const Word& w, std::size_t n) const {
  check_n(n);
  if (w.empty()) throw std::invalid_argument("occurrences: empty word");
  const std::string_view text(text_.data(), n);
  std::vector<ExactInt> ends;
  for (std::size_t at = text.find(w); at != std::string_view::npos; at = text.find(w, at + 1)) {
    ends.push_back(static_cast<ExactInt>(at + w.size()));
  }
  return ends;
}

GapPattern Oracle::gap_pattern(const Word& w, std::size_t n) const {
  const auto ends = occurrences(w, n);
  if (ends.size() < 5) {
    throw std::invalid_argument("gap_pattern: need at least five occurrences to read G_4");
  }
  // A gap is identified by its signed length and, when nonnegative, its letters.
  using GapKey = std::pair<ExactInt, Word>;
  std::vector<GapKey> gaps;
  GapPattern pattern;
  for (std::size_t p = 0; p + 1 < ends.size(); ++p) {
    const ExactInt len = ends[p + 1] - ends[p] - static_cast<ExactInt>(w.size());
    Word letters;
    if (len > 0) {
      letters = text_.substr(static_cast<std::size_t>(ends[p]), static_cast<std::size_t>(len));
    }
    pattern.lengths.push_back(len);
    gaps.emplace_back(len, std::move(letters));
  }
  const GapKey& g1 = gaps[0];
  const GapKey& g2 = gaps[1];
  const GapKey& g4 = gaps[3];
  for (const auto& gap : gaps) {
    pattern.coded += gap == g1 ? 'a' : gap == g2 ? 'b' : gap == g4 ? 'c' : '?';
  }
  pattern.distinct_gaps = std::set<GapKey>(gaps.begin(), gaps.end()).size();
  pattern.matches_word = pattern.coded == substitution_prefix(pattern.coded.size());
  return pattern;
}

int Oracle::kernel_of(const Word& w) const {
  if (w.empty() || text_.find(w) == Word::npos) {
    throw std::invalid_argument("kernel_of: not a factor of the materialized prefix: " + w);
  }
  int best = 0;
  Word best_word;
  for (int m = 1; kernel_number(m) <= static_cast<ExactInt>(w.size()); ++m) {
    const KernelWord kernel = kernel_word(m);
    if (w.find(kernel.content) != Word::npos) {
      best = m;
      best_word = kernel.content;
    }
  }
  const std::size_t first = w.find(best_word);
  if (w.find(best_word, first + 1) != Word::npos) {
    throw std::logic_error("kernel_of: maximal kernel word occurs more than once in " + w);
  }
  return best;
}

std::vector<Word> Oracle::square_roots_ending_at(std::size_t e) const {
  check_n(e);
  const std::string_view text(text_.data(), e);
  std::vector<Word> roots;
  for (std::size_t len = 1; 2 * len <= e; ++len) {
    if (is_power_ending(text, e, len, 2)) roots.emplace_back(text.substr(e - len, len));
  }
  return roots;
}

bool Oracle::assert_no_fourth_powers(std::size_t n) const {
  check_n(n);
  const std::string_view text(text_.data(), n);
  for (std::size_t end = 1; end <= n; ++end) {
    for (std::size_t len = 1; 4 * len <= end; ++len) {
      if (is_power_ending(text, end, len, 4)) return false;
    }
  }
  return true;
}

ExhaustiveReport Oracle::validate_exhaustive(std::size_t n) const {
  const RepetitionSummary restricted = scan_repetitions(n, ScanMode::restricted);
  const RepetitionSummary full = scan_repetitions(n, ScanMode::exhaustive);

  ExhaustiveReport report;
  report.n = n;

  std::map<int, std::set<OccurrenceKey>> seen_restricted, seen_full;
  for (const auto& r : restricted.occurrences) seen_restricted[r.power].insert({r.end_pos, r.root_len});
  for (const auto& r : full.occurrences) seen_full[r.power].insert({r.end_pos, r.root_len});
  for (int power : {2, 3}) {
    std::vector<OccurrenceKey> diff;
    std::set_symmetric_difference(seen_restricted[power].begin(), seen_restricted[power].end(),
                                  seen_full[power].begin(), seen_full[power].end(),
                                  std::back_inserter(diff));
    report.restricted_mismatches += diff.size();
  }

  std::set<ExactInt> square_lengths, cube_lengths;
  for (int m = 0; trib_number(m) <= static_cast<ExactInt>(n); ++m) {
    square_lengths.insert(2 * trib_number(m));
    square_lengths.insert(2 * trib_number(m) + 2 * trib_number(m - 1));
    if (m >= 3) cube_lengths.insert(3 * trib_number(m));
  }
  const std::string_view text(text_.data(), n);
  for (const auto& r : full.occurrences) {
    const ExactInt total = r.root_len * r.power;
    if (r.power == 2 && !length_in(square_lengths, total)) ++report.bad_square_lengths;
    if (r.power == 3 && !length_in(cube_lengths, total)) ++report.bad_cube_lengths;
    const auto len = static_cast<std::size_t>(r.root_len);
    if (!is_primitive(text.substr(static_cast<std::size_t>(r.end_pos) - len, len))) {
      ++report.imprimitive_roots;
    }
  }
  for (std::size_t end = 1; end <= n; ++end) {
    for (std::size_t len = 1; 4 * len <= end; ++len) {
      if (is_power_ending(text, end, len, 4)) ++report.fourth_powers;
    }
  }
  return report;
}

}  // namespace trib
