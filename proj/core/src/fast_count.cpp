#include "trib/fast_count.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "trib/closed_forms.hpp"
#include "trib/word.hpp"

namespace trib {

namespace {

ExactInt t(int m) { return trib_number(m); }
ExactInt k(int m) { return kernel_number(m); }

void check_order(int m, int lo, const char* what) {
  if (m < lo || m > kMaxFormulaOrder) {
    throw std::out_of_range(std::string(what) + ": order " + std::to_string(m) + " out of range");
  }
}

std::string tag(SquareCase j, int m) {
  return "(j=" + std::to_string(index(j)) + ", m=" + std::to_string(m) + ")";
}

constexpr std::array<SquareCase, 3> kPositionalOrder = {SquareCase::third, SquareCase::second,
                                                        SquareCase::first};

using SquareSource = std::function<std::vector<ExactInt>(SquareCase, int)>;

// b over Gamma_{j,m,1} from the three child vectors plus the +1 block.
std::vector<ExactInt> expand_square(SquareCase j, int m, const SquareSource& child) {
  const SquareGamma g = SquareGamma::make(j, m);
  if (!g.has_children) throw std::logic_error("expand_square: base segment " + tag(j, m));
  std::vector<ExactInt> out;
  out.reserve(static_cast<std::size_t>(g.size()));
  for (SquareCase part : kPositionalOrder) {
    const auto v = child(part, g.child_order);
    out.insert(out.end(), v.begin(), v.end());
  }
  if (static_cast<ExactInt>(out.size()) != g.size()) {
    throw std::logic_error("expand_square: child sizes do not tile " + tag(j, m));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (g.in_increment(g.lo + static_cast<ExactInt>(i))) ++out[i];
  }
  return out;
}

std::vector<ExactInt> slice(const std::vector<ExactInt>& table, ExactInt lo, ExactInt hi) {
  return {table.begin() + static_cast<std::ptrdiff_t>(lo),
          table.begin() + static_cast<std::ptrdiff_t>(hi) + 1};
}

std::vector<ExactInt> prefix_sums(const std::vector<ExactInt>& v) {
  std::vector<ExactInt> out(v.size());
  std::partial_sum(v.begin(), v.end(), out.begin());
  return out;
}

BaseTables build_base_tables() {
  BaseTables base;

  // Explicit square counts; everything else in [1, 51] is either zero or
  // follows from one application of the segment recursion.
  base.b_small.assign(static_cast<std::size_t>(kSquareBaseLimit) + 1, 0);
  for (int pos : {8, 10, 14, 15, 16, 19, 20, 28, 29, 30, 31}) base.b_small[pos] = 1;
  const SquareSource from_table = [&base](SquareCase j, int m) {
    const SquareGamma g = SquareGamma::make(j, m);
    return slice(base.b_small, g.lo, g.hi);
  };
  for (auto [j, m] : {std::pair{SquareCase::first, 5}, std::pair{SquareCase::second, 6},
                      std::pair{SquareCase::first, 6}}) {
    const SquareGamma g = SquareGamma::make(j, m);
    const auto v = expand_square(j, m, from_table);
    std::copy(v.begin(), v.end(), base.b_small.begin() + static_cast<std::ptrdiff_t>(g.lo));
  }

  // d vanishes below 52; Gamma_{7,1}, Gamma_{8,1}, Gamma_{9,1} are explicit.
  base.d_small.assign(static_cast<std::size_t>(kCubeBaseLimit) + 1, 0);
  const std::array<std::pair<int, std::vector<int>>, 3> cube_ones = {{
      {52, {6}},
      {96, {11, 12, 43}},
      {177, {20, 21, 22, 23, 30, 79, 80, 111}},
  }};
  for (const auto& [lo, offsets] : cube_ones) {
    for (int off : offsets) base.d_small[static_cast<std::size_t>(lo + off)] = 1;
  }

  base.b_prefix = prefix_sums(base.b_small);
  base.d_prefix = prefix_sums(base.d_small);
  return base;
}

}  // namespace

int index(SquareCase j) { return static_cast<int>(j); }

SquareCase square_case(int j) {
  if (j < 1 || j > 3) throw std::out_of_range("square case must be 1, 2 or 3");
  return static_cast<SquareCase>(j);
}

SquareGamma SquareGamma::make(SquareCase j, int m) {
  check_order(m, 4, "SquareGamma");
  SquareGamma g;
  g.j = j;
  g.m = m;
  const ExactInt kernel_end = exact_div(t(m) + t(m - 2) - 1, 2, "P(K_m,1)");
  switch (j) {
    case SquareCase::third:
      g.lo = kernel_end;
      g.hi = kernel_end - t(m) + 2 * t(m - 1) - 1;
      g.has_children = m >= 7;
      g.child_order = m - 3;
      break;
    case SquareCase::second:
      g.lo = kernel_end - t(m) + 2 * t(m - 1);
      g.hi = kernel_end + t(m - 1) - t(m - 2) - 1;
      g.has_children = m >= 6;
      g.child_order = m - 2;
      break;
    case SquareCase::first:
      g.lo = kernel_end + t(m - 1) - t(m - 2);
      g.hi = kernel_end + t(m - 1) - 1;
      g.has_children = m >= 5;
      g.child_order = m - 1;
      break;
  }
  if (!g.has_children) {
    g.child_order = 0;
    return g;
  }
  const int c = g.child_order;
  g.shift = t(m - 1);
  g.second_child = g.lo + t(c - 4);
  g.third_child = g.second_child + t(c - 3);
  switch (j) {
    case SquareCase::third: g.increment_edge = g.lo + t(m - 4) - k(m - 3) + 1; break;
    case SquareCase::second: g.increment_edge = g.lo + t(m - 3) - k(m) + 1; break;
    case SquareCase::first: g.increment_edge = g.lo + t(m - 2) - k(m) + 1; break;
  }
  return g;
}

bool SquareGamma::in_increment(ExactInt n) const {
  if (!contains(n) || !has_children) return false;
  return j == SquareCase::third ? n < increment_edge : n >= increment_edge;
}

CubeGamma CubeGamma::make(int m) {
  check_order(m, 7, "CubeGamma");
  CubeGamma g;
  g.m = m;
  g.lo = exact_div(t(m) + t(m - 2) - 1, 2, "min Gamma_m");
  g.hi = exact_div(t(m + 1) + t(m - 1) - 3, 2, "max Gamma_m");
  g.increment_lo = g.lo + exact_div(-t(m - 2) + 5 * t(m - 4) + 1, 2, "cube leading zeros");
  g.increment_end = g.increment_lo + exact_div(t(m - 2) - 3 * t(m - 4) - 1, 2, "cube block width");
  g.has_children = m >= 10;
  g.shift = t(m - 1);
  g.second_child = g.lo + t(m - 4);
  g.third_child = g.second_child + t(m - 3);
  return g;
}

const BaseTables& BaseTables::standard() {
  static const BaseTables base = build_base_tables();
  return base;
}

ExactInt sum_b_gamma(SquareCase j, int m) {
  check_order(m, 4, "sum_b_gamma");
  const ExactInt t0 = t(m), t1 = t(m - 1), t2 = t(m - 2);
  ExactInt num = 0;
  switch (j) {
    case SquareCase::first:
      num = 2 * m * (4 * t0 - 9 * t1 + 10 * t2) + (19 * t0 + 36 * t1 - 169 * t2) - 11;
      break;
    case SquareCase::second:
      num = 2 * m * (10 * t0 - 6 * t1 - 19 * t2) + (-189 * t0 + 156 * t1 + 331 * t2) - 11;
      break;
    case SquareCase::third:
      num = 2 * m * (-19 * t0 + 29 * t1 + 13 * t2) + (237 * t0 - 358 * t1 - 157 * t2) + 33;
      break;
  }
  return exact_div(num, 44, "sum b(Gamma) " + tag(j, m));
}

ExactInt phi(int m) {
  check_order(m, 4, "phi");
  const ExactInt t0 = t(m), t1 = t(m - 1), t2 = t(m - 2);
  return exact_div(2 * m * (-5 * t0 + 14 * t1 + 4 * t2) + (67 * t0 - 166 * t1 + 5 * t2) + 11, 44,
                   "Phi_m");
}

ExactInt b_cum_at_gamma_max(SquareCase j, int m) {
  check_order(m, 4, "b_cum_at_gamma_max");
  const ExactInt t0 = t(m), t1 = t(m - 1), t2 = t(m - 2);
  ExactInt num = 0;
  switch (j) {
    case SquareCase::third:
      num = m * (-25 * t0 + 48 * t1 + 31 * t2) + (173 * t0 - 294 * t1 - 213 * t2) + 11 * (m + 11);
      break;
    case SquareCase::second:
      // The constant term carries 1/22, not 1/44.
      num = m * (-5 * t0 + 36 * t1 - 7 * t2) + 2 * (-8 * t0 - 69 * t1 + 59 * t2) + 11 * (m + 10);
      break;
    case SquareCase::first:
      num = m * (3 * t0 + 18 * t1 + 13 * t2) + (3 * t0 - 102 * t1 - 51 * t2) + 11 * (m + 9);
      break;
  }
  return exact_div(num, 44, "B(max Gamma) " + tag(j, m));
}

ExactInt sum_d_gamma(int m) {
  check_order(m, 7, "sum_d_gamma");
  const ExactInt t0 = t(m), t1 = t(m - 1), t2 = t(m - 2);
  return exact_div(2 * m * (7 * t0 - 13 * t1 + t2) + (-41 * t0 + 74 * t1 - 7 * t2) + 11, 44,
                   "sum d(Gamma_m)");
}

ExactInt d_cum_at_gamma_max(int m) {
  check_order(m, 7, "d_cum_at_gamma_max");
  const ExactInt t0 = t(m), t1 = t(m - 1), t2 = t(m - 2);
  return exact_div(m * (9 * t0 - 12 * t1 - 5 * t2) + 12 * (-2 * t0 + 2 * t1 + t2) + 11 * m, 44,
                   "D(max Gamma_m)");
}

std::vector<ExactInt> materialize_b(SquareCase j, int m) {
  const SquareGamma g = SquareGamma::make(j, m);
  if (g.hi <= kSquareBaseLimit) return slice(BaseTables::standard().b_small, g.lo, g.hi);
  return expand_square(j, m, [](SquareCase part, int c) { return materialize_b(part, c); });
}

std::vector<ExactInt> materialize_d(int m) {
  const CubeGamma g = CubeGamma::make(m);
  if (g.hi <= kCubeBaseLimit) return slice(BaseTables::standard().d_small, g.lo, g.hi);
  std::vector<ExactInt> out;
  out.reserve(static_cast<std::size_t>(g.size()));
  for (int c : {m - 3, m - 2, m - 1}) {
    const auto v = materialize_d(c);
    out.insert(out.end(), v.begin(), v.end());
  }
  if (static_cast<ExactInt>(out.size()) != g.size()) {
    throw std::logic_error("materialize_d: child sizes do not tile m=" + std::to_string(m));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (g.in_increment(g.lo + static_cast<ExactInt>(i))) ++out[i];
  }
  return out;
}

std::vector<std::string> run_self_test() {
  std::vector<std::string> failures;
  const auto expect = [&failures](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  const auto sum = [](const std::vector<ExactInt>& v) {
    return std::accumulate(v.begin(), v.end(), ExactInt{0});
  };
  const BaseTables& base = BaseTables::standard();

  ExactInt running = base.b_prefix[7];
  for (int m = 4; m <= 12; ++m) {
    ExactInt all_three = 0;
    for (SquareCase j : kPositionalOrder) {
      const auto v = materialize_b(j, m);
      const ExactInt s = sum(v);
      all_three += s;
      running += s;
      expect(s == sum_b_gamma(j, m), "sum_b_gamma " + tag(j, m) + ": closed form " +
                                         to_string(sum_b_gamma(j, m)) + ", direct " + to_string(s));
      expect(running == b_cum_at_gamma_max(j, m),
             "b_cum_at_gamma_max " + tag(j, m) + ": closed form " +
                 to_string(b_cum_at_gamma_max(j, m)) + ", direct " + to_string(running));
    }
    expect(all_three == phi(m), "phi m=" + std::to_string(m));
  }

  running = base.d_prefix[51];
  for (int m = 7; m <= 13; ++m) {
    const ExactInt s = sum(materialize_d(m));
    running += s;
    expect(s == sum_d_gamma(m), "sum_d_gamma m=" + std::to_string(m) + ": closed form " +
                                    to_string(sum_d_gamma(m)) + ", direct " + to_string(s));
    expect(running == d_cum_at_gamma_max(m), "d_cum_at_gamma_max m=" + std::to_string(m));
  }

  // Split points must be strictly ordered for the case analysis to be valid.
  for (int m = 5; m < kMaxFormulaOrder; ++m) {
    const SquareGamma g1 = SquareGamma::make(SquareCase::first, m);
    expect(g1.third_child < g1.increment_edge && g1.increment_edge <= g1.hi,
           "threshold order theta^9 < eta^3 < theta^10 at m=" + std::to_string(m));
    if (m >= 6) {
      const SquareGamma g2 = SquareGamma::make(SquareCase::second, m);
      expect(g2.second_child < g2.increment_edge && g2.increment_edge <= g2.third_child,
             "threshold order theta^5 < eta^2 <= theta^6 at m=" + std::to_string(m));
    }
    if (m >= 7) {
      const SquareGamma g3 = SquareGamma::make(SquareCase::third, m);
      expect(g3.third_child < g3.increment_edge && g3.increment_edge <= g3.hi,
             "threshold order theta^3 < eta^1 < theta^4 at m=" + std::to_string(m));
      const CubeGamma c = CubeGamma::make(m);
      expect(c.lo < c.increment_lo && c.increment_lo < c.increment_end &&
                 c.increment_end == c.second_child && c.second_child < c.third_child &&
                 c.third_child <= c.hi,
             "cube threshold order at m=" + std::to_string(m));
    }
  }
  return failures;
}

struct FastCounter::Tables {
  int max_square_order = 0;
  int max_cube_order = 0;
  std::vector<std::array<SquareGamma, 3>> square;  // [m - 4][j - 1]
  std::vector<std::array<ExactInt, 3>> square_sum;
  std::vector<std::array<ExactInt, 3>> square_cum;
  std::vector<CubeGamma> cube;  // [m - 7]
  std::vector<ExactInt> cube_sum;
  std::vector<ExactInt> cube_cum;
};

FastCounter::FastCounter() = default;
FastCounter::~FastCounter() = default;

const FastCounter& FastCounter::standard() {
  static const FastCounter counter;
  return counter;
}

const FastCounter::Tables& FastCounter::tables() const {
  std::call_once(once_, [this] {
    const auto failures = run_self_test();
    if (!failures.empty()) {
      std::string message = "closed-form self-test failed:";
      for (const auto& f : failures) message += "\n  " + f;
      throw SelfTestError(message);
    }
    auto built = std::make_unique<Tables>();
    // Orders until the segments run past kNCap, plus one.
    for (int m = 4;; ++m) {
      std::array<SquareGamma, 3> gammas;
      std::array<ExactInt, 3> sums{}, cums{};
      for (int j = 1; j <= 3; ++j) {
        gammas[j - 1] = SquareGamma::make(square_case(j), m);
        sums[j - 1] = sum_b_gamma(square_case(j), m);
        cums[j - 1] = b_cum_at_gamma_max(square_case(j), m);
      }
      built->square.push_back(gammas);
      built->square_sum.push_back(sums);
      built->square_cum.push_back(cums);
      built->max_square_order = m;
      if (gammas[0].hi > kNCap) break;
    }
    for (int m = 7;; ++m) {
      const CubeGamma g = CubeGamma::make(m);
      built->cube.push_back(g);
      built->cube_sum.push_back(sum_d_gamma(m));
      built->cube_cum.push_back(d_cum_at_gamma_max(m));
      built->max_cube_order = m;
      if (g.hi > kNCap) break;
    }
    tables_ = std::move(built);
  });
  return *tables_;
}

int FastCounter::max_square_order() const { return tables().max_square_order; }
int FastCounter::max_cube_order() const { return tables().max_cube_order; }

const SquareGamma& FastCounter::square_gamma(SquareCase j, int m) const {
  const Tables& tb = tables();
  if (m < 4 || m > tb.max_square_order) {
    throw std::out_of_range("square_gamma: order " + std::to_string(m) + " out of range");
  }
  return tb.square[static_cast<std::size_t>(m - 4)][static_cast<std::size_t>(index(j) - 1)];
}

ExactInt FastCounter::segment_sum(SquareCase j, int m) const {
  square_gamma(j, m);
  return tables().square_sum[static_cast<std::size_t>(m - 4)][static_cast<std::size_t>(index(j) - 1)];
}

ExactInt FastCounter::cumulative_at_max(SquareCase j, int m) const {
  square_gamma(j, m);
  return tables().square_cum[static_cast<std::size_t>(m - 4)][static_cast<std::size_t>(index(j) - 1)];
}

const CubeGamma& FastCounter::cube_gamma(int m) const {
  const Tables& tb = tables();
  if (m < 7 || m > tb.max_cube_order) {
    throw std::out_of_range("cube_gamma: order " + std::to_string(m) + " out of range");
  }
  return tb.cube[static_cast<std::size_t>(m - 7)];
}

ExactInt FastCounter::cube_segment_sum(int m) const {
  cube_gamma(m);
  return tables().cube_sum[static_cast<std::size_t>(m - 7)];
}

ExactInt FastCounter::cube_cumulative_at_max(int m) const {
  cube_gamma(m);
  return tables().cube_cum[static_cast<std::size_t>(m - 7)];
}

const SquareGamma& FastCounter::locate_square(ExactInt n) const {
  if (n < 8 || n > kNCap) throw std::out_of_range("locate_square: n = " + to_string(n));
  const Tables& tb = tables();
  std::size_t i = 0;
  while (i + 1 < tb.square.size() && tb.square[i + 1][2].lo <= n) ++i;
  for (const SquareGamma& g : tb.square[i]) {
    if (g.contains(n)) return g;
  }
  throw std::logic_error("locate_square: segments do not tile n = " + to_string(n));
}

const CubeGamma& FastCounter::locate_cube(ExactInt n) const {
  if (n < 52 || n > kNCap) throw std::out_of_range("locate_cube: n = " + to_string(n));
  const Tables& tb = tables();
  for (const CubeGamma& g : tb.cube) {
    if (g.contains(n)) return g;
  }
  throw std::logic_error("locate_cube: segments do not tile n = " + to_string(n));
}

ExactInt FastCounter::b_at(ExactInt n) const {
  if (n < 1 || n > kNCap) throw std::out_of_range("b_at: n = " + to_string(n));
  ExactInt count = 0;
  while (n > kSquareBaseLimit) {
    const SquareGamma& g = locate_square(n);
    if (g.in_increment(n)) ++count;
    n -= g.shift;
  }
  return count + BaseTables::standard().b_small[static_cast<std::size_t>(n)];
}

ExactInt FastCounter::algorithm_B(ExactInt n) const {
  if (n < 0 || n > kNCap) throw std::out_of_range("algorithm_B: n = " + to_string(n));
  const BaseTables& base = BaseTables::standard();
  if (n <= kSquareBaseLimit) return base.b_prefix[static_cast<std::size_t>(n)];

  const SquareGamma* g = &locate_square(n);
  // B(min Gamma_{j,m,1} - 1) is B at the end of the preceding segment.
  ExactInt total = 0;
  switch (g->j) {
    case SquareCase::third: total = cumulative_at_max(SquareCase::first, g->m - 1); break;
    case SquareCase::second: total = cumulative_at_max(SquareCase::third, g->m); break;
    case SquareCase::first: total = cumulative_at_max(SquareCase::second, g->m); break;
  }

  // Partial sum from min Gamma to x: pick the child holding x - t_{m-1},
  // add whole earlier children and the +1s at or before x, then descend.
  ExactInt x = n;
  while (x > kSquareBaseLimit) {
    const int c = g->child_order;
    if (g->j == SquareCase::third) {
      total += (x < g->increment_edge ? x : g->increment_edge - 1) - g->lo + 1;
    } else if (x >= g->increment_edge) {
      total += x - g->increment_edge + 1;
    }
    SquareCase next = SquareCase::third;
    if (x >= g->third_child) {
      next = SquareCase::first;
      total += segment_sum(SquareCase::third, c) + segment_sum(SquareCase::second, c);
    } else if (x >= g->second_child) {
      next = SquareCase::second;
      total += segment_sum(SquareCase::third, c);
    }
    x -= g->shift;
    g = &square_gamma(next, c);
    if (!g->contains(x)) throw std::logic_error("algorithm_B: descent left its segment");
  }
  return total + base.b_prefix[static_cast<std::size_t>(x)] -
         base.b_prefix[static_cast<std::size_t>(g->lo - 1)];
}

ExactInt FastCounter::d_at(ExactInt n) const {
  if (n < 1 || n > kNCap) throw std::out_of_range("d_at: n = " + to_string(n));
  ExactInt count = 0;
  while (n > kCubeBaseLimit) {
    const CubeGamma& g = locate_cube(n);
    if (g.in_increment(n)) ++count;
    n -= g.shift;
  }
  return count + BaseTables::standard().d_small[static_cast<std::size_t>(n)];
}

ExactInt FastCounter::algorithm_D(ExactInt n) const {
  if (n < 0 || n > kNCap) throw std::out_of_range("algorithm_D: n = " + to_string(n));
  const BaseTables& base = BaseTables::standard();
  if (n <= kCubeBaseLimit) return base.d_prefix[static_cast<std::size_t>(n)];

  const CubeGamma* g = &locate_cube(n);
  ExactInt total = cube_cumulative_at_max(g->m - 1);
  ExactInt x = n;
  while (x > kCubeBaseLimit) {
    const int m = g->m;
    if (x >= g->increment_end) {
      total += g->increment_end - g->increment_lo;
    } else if (x >= g->increment_lo) {
      total += x - g->increment_lo + 1;
    }
    int next = m - 3;
    if (x >= g->third_child) {
      next = m - 1;
      total += cube_segment_sum(m - 3) + cube_segment_sum(m - 2);
    } else if (x >= g->second_child) {
      next = m - 2;
      total += cube_segment_sum(m - 3);
    }
    x -= g->shift;
    g = &cube_gamma(next);
    if (!g->contains(x)) throw std::logic_error("algorithm_D: descent left its segment");
  }
  return total + base.d_prefix[static_cast<std::size_t>(x)] -
         base.d_prefix[static_cast<std::size_t>(g->lo - 1)];
}

}  // namespace trib
