#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "kbonacci/counting.hpp"

using namespace kbonacci;

namespace {

// Palindrome counts (min length 2) of W_n, counted by a quadratic scan
// independent of this library and frozen here.
const std::vector<std::int64_t> kP3{0, 0, 1, 3, 4, 9, 19, 38, 66, 123, 227, 416, 766};
const std::vector<std::int64_t> kP4{0, 0, 1, 5, 14, 24, 44, 88, 173, 336, 655, 1252, 2416, 4659};
const std::vector<std::int64_t> kP5{0,   0,   1,    5,    17,   45,    84,   160,
                                    311, 618, 1221, 2401, 4726, 9307, 18273, 35928};

}  // namespace

TEST(Counting, InitialClosedForm) {
  EXPECT_EQ(p_initial(3, 1), 0);
  EXPECT_EQ(p_initial(3, 2), 1);
  EXPECT_EQ(p_initial(5, 4), 17);
  EXPECT_THROW(p_initial(3, 3), DomainError);
  EXPECT_THROW(p_initial(3, 0), DomainError);
  EXPECT_THROW(p_initial(2, 1), DomainError);
}

TEST(Counting, DerivedMatchesFrozenScan) {
  EXPECT_EQ(count_table(3, 12).p, kP3);
  EXPECT_EQ(count_table(4, 13).p, kP4);
  EXPECT_EQ(count_table(5, 15).p, kP5);
}

TEST(Counting, FrozenValuesMatchBruteForce) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(brute::count(word(3, n).vector(), 2), static_cast<std::uint64_t>(kP3[static_cast<std::size_t>(n)]));
    EXPECT_EQ(brute::count(word(4, n).vector(), 2), static_cast<std::uint64_t>(kP4[static_cast<std::size_t>(n)]));
    EXPECT_EQ(brute::count(word(5, n).vector(), 2), static_cast<std::uint64_t>(kP5[static_cast<std::size_t>(n)]));
  }
}

TEST(Counting, BorderingCounts) {
  EXPECT_EQ(b_count(4, 4, 3), 6);
  EXPECT_EQ(b_count(4, 4, 2), 2);
  EXPECT_EQ(b_count(4, 4, 1), 0);
  EXPECT_EQ(b_count(4, 5, 3), 4);
  EXPECT_EQ(b_count(4, 6, 3), 0);
  EXPECT_EQ(b_count(3, 3, 2), 2);
  EXPECT_THROW(b_count(4, 3, 2), DomainError);
}

TEST(Counting, StraddlingCounts) {
  EXPECT_EQ(s_count(4, 6), 0);
  EXPECT_EQ(s_count(4, 7), 1);
  EXPECT_EQ(s_count(4, 9), 7);
  EXPECT_EQ(s_count(4, 10), 14);
  EXPECT_EQ(s_count(4, 11), 0);
  EXPECT_EQ(s_count(3, 5), 1);
  EXPECT_EQ(s_count(3, 7), 6);
}

TEST(Counting, BorderMaxLength) {
  EXPECT_EQ(border_max_length(4, 4, 3), 2 * (8 - 2) + 1);
  EXPECT_EQ(border_max_length(4, 4, 2), 2 * (4 - 2) + 1);
  EXPECT_THROW(border_max_length(4, 4, 1), DomainError);
}

TEST(Counting, BorderingTotalClosedForm) {
  for (int k = 3; k <= 8; ++k) {
    for (int n = k; n <= 2 * k - 3; ++n) {
      std::int64_t sum = 0;
      for (int j = 0; j < n; ++j) {
        sum += b_count(k, n, j);
      }
      EXPECT_EQ(bordering_total_closed_form(k, n), sum) << "k=" << k << " n=" << n;
    }
  }
}

TEST(Counting, AlphaModes) {
  EXPECT_EQ(alpha(4, 4, FormulaMode::Derived), 8);
  EXPECT_EQ(alpha(4, 4, FormulaMode::AsStated), 12);
  EXPECT_EQ(alpha(4, 9, FormulaMode::Derived), 7);
  EXPECT_EQ(alpha(4, 9, FormulaMode::AsStated), 7);
  EXPECT_EQ(alpha(4, 6, FormulaMode::AsStated), 0);
  // Both modes agree for k = 3 and for every n >= 2k-3.
  for (int k = 3; k <= 7; ++k) {
    for (int n = k; n <= 4 * k; ++n) {
      if (k == 3 || n >= 2 * k - 2) {
        EXPECT_EQ(alpha(k, n, FormulaMode::Derived), alpha(k, n, FormulaMode::AsStated)) << k << ' ' << n;
      }
    }
  }
  EXPECT_THROW(alpha(4, 3), DomainError);
}

TEST(Counting, AsStatedTableDiverges) {
  EXPECT_EQ(p_total(4, 4, FormulaMode::AsStated), 18);
  EXPECT_EQ(p_total(4, 4, FormulaMode::Derived), 14);
  EXPECT_EQ(p_total(3, 12, FormulaMode::AsStated), kP3.back());
}

TEST(Counting, Overflow) {
  EXPECT_THROW(count_table(3, 120), OverflowError);
}
