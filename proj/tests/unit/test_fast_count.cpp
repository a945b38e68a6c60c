#include <stdexcept>

#include "checks.hpp"
#include "test_util.hpp"
#include "trib/fast_count.hpp"
#include "trib/word.hpp"

using namespace trib;

namespace {
const FastCounter& fast() { return FastCounter::standard(); }
}  // namespace

TEST(BaseTables, Squares) {
  const auto& base = BaseTables::standard();
  ASSERT_EQ(base.b_small.size(), 52u);
  for (int i = 1; i <= 7; ++i) EXPECT_EI(base.b_small[i], 0);
  EXPECT_EI(base.b_small[8], 1);
  EXPECT_EI(base.b_small[27], 2);
  const std::vector<ExactInt> gamma_1_5 = {1, 0, 1, 0, 0, 1, 2};
  for (std::size_t i = 0; i < gamma_1_5.size(); ++i) EXPECT_EI(base.b_small[21 + i], gamma_1_5[i]);
  for (std::size_t i = 1; i < base.b_small.size(); ++i) {
    EXPECT_EI(base.b_prefix[i], base.b_prefix[i - 1] + base.b_small[i]);
  }
}

TEST(BaseTables, Cubes) {
  const auto& base = BaseTables::standard();
  ASSERT_EQ(base.d_small.size(), 326u);
  for (int i = 1; i <= 51; ++i) EXPECT_EI(base.d_small[i], 0);
  EXPECT_EI(base.d_small[58], 1);
  EXPECT_EI(base.d_prefix[325], 12);
}

TEST(PointCounts, Examples) {
  EXPECT_EI(fast().b_at(7), 0);
  EXPECT_EI(fast().b_at(8), 1);
  EXPECT_EI(fast().b_at(27), 2);
  EXPECT_EI(fast().d_at(51), 0);
  EXPECT_EI(fast().d_at(58), 1);
  EXPECT_THROW(fast().b_at(0), std::out_of_range);
  EXPECT_THROW(fast().d_at(kNCap + 1), std::out_of_range);
}

TEST(SegmentSums, Examples) {
  EXPECT_EI(sum_b_gamma(SquareCase::third, 4), 1);
  EXPECT_EI(sum_b_gamma(SquareCase::first, 5), 5);
  EXPECT_THROW(sum_b_gamma(SquareCase::first, 3), std::out_of_range);
  EXPECT_THROW(sum_d_gamma(6), std::out_of_range);
  EXPECT_EI(phi(4), sum_b_gamma(SquareCase::first, 4) + sum_b_gamma(SquareCase::second, 4) +
                        sum_b_gamma(SquareCase::third, 4));
}

TEST(SegmentSums, MatchDirectSummation) {
  EXPECT_CLEAN(checks::segment_sums(12, 13));
}

TEST(SegmentSums, CumulativeChaining) {
  for (int m = 7; m <= 60; ++m) {
    EXPECT_EI(fast().algorithm_D(CubeGamma::make(m + 1).lo - 1), d_cum_at_gamma_max(m)) << m;
  }
  for (int m = 4; m <= 60; ++m) {
    EXPECT_EI(fast().algorithm_B(SquareGamma::make(SquareCase::third, m + 1).lo - 1),
              b_cum_at_gamma_max(SquareCase::first, m))
        << m;
  }
}

TEST(Algorithms, WorkedExamples) {
  EXPECT_EI(fast().algorithm_B(24), 9);
  EXPECT_EI(fast().algorithm_B(58), 45);
  EXPECT_EI(fast().algorithm_B(60), 47);
  EXPECT_EI(fast().algorithm_D(149), 4);
  EXPECT_EI(fast().algorithm_D(325), 12);
  EXPECT_EI(fast().algorithm_D(500), 29);
  EXPECT_EI(SquareGamma::make(SquareCase::third, 7).hi, 58);
  EXPECT_EI(CubeGamma::make(9).hi, 325);
  EXPECT_EI(CubeGamma::make(10).lo, 326);
  EXPECT_EI(CubeGamma::make(10).hi, 599);
}

TEST(Algorithms, LargeInputs) {
  EXPECT_EI(fast().algorithm_B(kNCap), parse_exact("20111627870358162968"));
  EXPECT_EI(fast().algorithm_D(kNCap), parse_exact("1152906719182850790"));
  EXPECT_EI(fast().algorithm_B(parse_exact("1000000000012345")), parse_exact("16525330065658183"));
  EXPECT_EI(fast().algorithm_D(parse_exact("1000000000012345")), parse_exact("929919905666622"));
  EXPECT_EI(fast().algorithm_B(0), 0);
  EXPECT_THROW(fast().algorithm_B(kNCap + 1), std::out_of_range);
  EXPECT_THROW(fast().algorithm_D(-1), std::out_of_range);
}

TEST(Algorithms, PrefixSumsOfPointCounts) {
  ExactInt B = 0, D = 0;
  for (ExactInt n = 1; n <= 20000; ++n) {
    B += fast().b_at(n);
    D += fast().d_at(n);
    ASSERT_EI(fast().algorithm_B(n), B) << to_string(n);
    ASSERT_EI(fast().algorithm_D(n), D) << to_string(n);
  }
}

TEST(Algorithms, MatchOracle) {
  EXPECT_CLEAN(checks::oracle_sweep(3000));
}

TEST(Segments, SquareTiling) {
  EXPECT_CLEAN(checks::square_tiling(4, 40));
}

TEST(Segments, CubeTiling) {
  EXPECT_CLEAN(checks::cube_tiling(7, 40));
}

TEST(Segments, Locate) {
  for (ExactInt n = 8; n <= 5000; ++n) {
    const auto& g = fast().locate_square(n);
    ASSERT_TRUE(g.contains(n)) << to_string(n);
  }
  for (ExactInt n = 52; n <= 5000; ++n) ASSERT_TRUE(fast().locate_cube(n).contains(n));
  EXPECT_TRUE(fast().locate_square(kNCap).contains(kNCap));
  EXPECT_TRUE(fast().locate_cube(kNCap).contains(kNCap));
  EXPECT_THROW(fast().locate_square(7), std::out_of_range);
  EXPECT_THROW(fast().locate_cube(51), std::out_of_range);
}

TEST(Segments, MaterializedVectors) {
  EXPECT_CLEAN(checks::materialized_b(12));
  EXPECT_CLEAN(checks::materialized_d(13));
}

TEST(Segments, IncrementBlocks) {
  for (int m = 5; m <= 40; ++m) {
    const auto g = SquareGamma::make(SquareCase::first, m);
    EXPECT_EI(g.increment_edge, 2 * trib_number(m - 1)) << m;
    EXPECT_EI(g.hi - g.increment_edge + 1, kernel_number(m) - 1) << m;
  }
}

TEST(SelfTest, Clean) {
  const auto mismatches = run_self_test();
  EXPECT_TRUE(mismatches.empty()) << (mismatches.empty() ? "" : mismatches.front());
}

TEST(SquareCase, Conversion) {
  EXPECT_EQ(square_case(2), SquareCase::second);
  EXPECT_EQ(index(SquareCase::third), 3);
  EXPECT_THROW(square_case(4), std::out_of_range);
}
