#include <gtest/gtest.h>

#include "kbonacci/generate.hpp"

using namespace kbonacci;

namespace {

std::string plain(int k, int n) { return to_plain(word(k, n)); }

}  // namespace

TEST(KbonacciNumber, FirstTerms) {
  const std::vector<std::uint64_t> fib{0, 1, 1, 2, 3, 5, 8, 13, 21};
  for (int n = 0; n < static_cast<int>(fib.size()); ++n) {
    EXPECT_EQ(kbonacci_number(2, n), fib[static_cast<std::size_t>(n)]);
  }
  const std::vector<std::uint64_t> trib{0, 0, 1, 1, 2, 4, 7, 13, 24, 44};
  for (int n = 0; n < static_cast<int>(trib.size()); ++n) {
    EXPECT_EQ(kbonacci_number(3, n), trib[static_cast<std::size_t>(n)]);
  }
  EXPECT_EQ(kbonacci_number(4, 3), 1u);
  EXPECT_EQ(kbonacci_number(4, 2), 0u);
}

TEST(KbonacciNumber, RejectsBadInput) {
  EXPECT_THROW(kbonacci_number(1, 3), DomainError);
  EXPECT_THROW(kbonacci_number(3, -1), DomainError);
  EXPECT_THROW(kbonacci_number(2, 200), OverflowError);
}

TEST(Generate, PrintedTribonacciWords) {
  EXPECT_EQ(plain(3, 0), "0");
  EXPECT_EQ(plain(3, 1), "01");
  EXPECT_EQ(plain(3, 2), "0102");
  EXPECT_EQ(plain(3, 3), "0102013");
  EXPECT_EQ(plain(3, 4), "0102013010234");
  EXPECT_EQ(plain(3, 5), "010201301023401020133435");
}

TEST(Generate, PrintedClassicalTribonacciWords) {
  EXPECT_EQ(to_plain(classical_word(3, 3)), "0102010");
  EXPECT_EQ(to_plain(classical_word(3, 4)), "0102010010201");
  EXPECT_EQ(to_plain(classical_word(3, 5)), "010201001020101020100102");
}

TEST(Generate, PrintedSixthWords) {
  EXPECT_EQ(plain(4, 6), "01020103010201401020103010245010201030102014010201034546");
  EXPECT_EQ(to_plain(classical_word(4, 6)), "01020103010201001020103010201010201030102010010201030102");
  EXPECT_EQ(plain(6, 6), "010201030102010401020103010201050102010301020104010201030102016");
}

TEST(Generate, MethodsAgree) {
  for (int k = 2; k <= 7; ++k) {
    for (int n = 0; n <= 14; ++n) {
      EXPECT_EQ(word(k, n, GenMethod::ByMorphism), word(k, n, GenMethod::ByRecurrence))
          << "k=" << k << " n=" << n;
    }
  }
}

TEST(Generate, LengthLaw) {
  for (int k = 2; k <= 6; ++k) {
    for (int n = 0; n <= 14; ++n) {
      EXPECT_EQ(word(k, n).size(), kbonacci_number(k, n + k));
      EXPECT_EQ(word_length(k, n), kbonacci_number(k, n + k));
    }
  }
}

TEST(Generate, FibonacciCaseReducesToFibonacciWord) {
  // k = 2: the classical word over {0,1} is the Fibonacci word.
  EXPECT_EQ(to_plain(classical_word(2, 5)), "0100101001001");
  EXPECT_EQ(reduce_mod_k(2, word(2, 5)), classical_word(2, 5));
}

TEST(Generate, ModKReduction) {
  for (int k = 2; k <= 6; ++k) {
    for (int n = 0; n <= 12; ++n) {
      EXPECT_EQ(reduce_mod_k(k, word(k, n)), classical_word(k, n));
    }
  }
}

TEST(Generate, MorphismOnDigits) {
  EXPECT_EQ(apply_morphism(3, Word{0}), (Word{0, 1}));
  EXPECT_EQ(apply_morphism(3, Word{2}), (Word{3}));
  EXPECT_EQ(apply_morphism(3, Word{4}), (Word{3, 5}));
  EXPECT_EQ(apply_morphism(3, Word{5}), (Word{6}));
  EXPECT_EQ(apply_morphism(4, Word{6}), (Word{4, 7}));
}

TEST(Generate, ShiftRoundTrip) {
  const Word w{0, 1, 0, 2};
  EXPECT_EQ(shift_add(3, w), (Word{3, 4, 3, 5}));
  EXPECT_EQ(shift_sub(3, shift_add(3, w)), w);
  EXPECT_THROW(shift_sub(1, w), DomainError);
}

TEST(Generate, SuffixPair) {
  EXPECT_EQ(suffix_pair(3, 4), (std::pair<Digit, Digit>{3, 4}));
  EXPECT_EQ(suffix_pair(3, 3), (std::pair<Digit, Digit>{1, 3}));
  EXPECT_EQ(suffix_pair(4, 6), (std::pair<Digit, Digit>{4, 6}));
  EXPECT_EQ(suffix_pair(5, 5), (std::pair<Digit, Digit>{1, 5}));
  EXPECT_THROW(suffix_pair(3, 0), DomainError);
  EXPECT_THROW(suffix_pair(2, 3), DomainError);
  for (int k = 3; k <= 5; ++k) {
    for (int n = 1; n <= 15; ++n) {
      const Word w = word(k, n);
      const auto [a, b] = suffix_pair(k, n);
      EXPECT_EQ(w.suffix(2), (Word{a, b})) << "k=" << k << " n=" << n;
    }
  }
}

TEST(Generate, LengthGuard) {
  const ScopedLengthGuard guard(100);
  EXPECT_NO_THROW(word(3, 7));  // 81 digits
  EXPECT_THROW(word(3, 8), SizeError);  // 149 digits
  EXPECT_THROW(word(3, 8, GenMethod::ByMorphism), SizeError);
  EXPECT_THROW(classical_word(3, 8), SizeError);
}

TEST(Generate, GuardRestored) {
  const std::size_t before = length_guard();
  {
    const ScopedLengthGuard guard(5);
    EXPECT_EQ(length_guard(), 5u);
  }
  EXPECT_EQ(length_guard(), before);
}

TEST(WordTable, PrefixViews) {
  const WordTable t(4, 9);
  EXPECT_EQ(t.k(), 4);
  EXPECT_EQ(t.n_max(), 9);
  for (int i = 0; i <= 9; ++i) {
    EXPECT_EQ(t[i], word(4, i));
    EXPECT_EQ(t.view(i).size(), t.length(i));
  }
  EXPECT_THROW((void)t[10], DomainError);
  EXPECT_THROW((void)t.length(-1), DomainError);
}
