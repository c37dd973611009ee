#include <gtest/gtest.h>

#include <sstream>

#include "kbonacci/word.hpp"

using kbonacci::DomainError;
using kbonacci::Word;

TEST(Word, ParsePlainAndSeparated) {
  EXPECT_EQ(Word::parse("0102"), (Word{0, 1, 0, 2}));
  EXPECT_EQ(Word::parse("0 1 10 2"), (Word{0, 1, 10, 2}));
  EXPECT_EQ(Word::parse("3,4, 12"), (Word{3, 4, 12}));
  EXPECT_TRUE(Word::parse("").empty());
  EXPECT_THROW(Word::parse("01a"), DomainError);
  EXPECT_THROW(Word::parse("1 x 2"), DomainError);
}

TEST(Word, OneBasedAccess) {
  const Word w{5, 6, 7, 8};
  EXPECT_EQ(w.at(1), 5u);
  EXPECT_EQ(w.at(4), 8u);
  EXPECT_EQ(w.front(), 5u);
  EXPECT_EQ(w.back(), 8u);
  EXPECT_THROW((void)w.at(0), DomainError);
  EXPECT_THROW((void)w.at(5), DomainError);
  EXPECT_EQ(w.slice(2, 3), (Word{6, 7}));
  EXPECT_EQ(w.prefix(2), (Word{5, 6}));
  EXPECT_EQ(w.suffix(2), (Word{7, 8}));
  EXPECT_EQ(w.drop_front(1), (Word{6, 7, 8}));
  EXPECT_EQ(w.drop_back(3), (Word{5}));
  EXPECT_EQ(w.reversed(), (Word{8, 7, 6, 5}));
}

TEST(Word, SearchAndDigits) {
  const Word w = Word::parse("0102013");
  EXPECT_EQ(w.find(Word{0, 1}), 1u);
  EXPECT_EQ(w.find(Word{1, 3}), 6u);
  EXPECT_EQ(w.find(Word{3, 0}), 0u);
  EXPECT_TRUE(w.contains(Word{2, 0, 1}));
  EXPECT_TRUE(w.starts_with(Word{0, 1, 0}));
  EXPECT_TRUE(w.ends_with(Word{1, 3}));
  EXPECT_EQ(w.count(0), 3u);
  EXPECT_EQ(w.max_digit(), 3u);
  EXPECT_EQ(w.min_digit(), 0u);
  EXPECT_EQ(w.alphabet().size(), 4u);
}

TEST(Word, Rendering) {
  const Word small{0, 1, 2};
  const Word big{3, 12, 3};
  EXPECT_EQ(to_plain(small), "012");
  EXPECT_EQ(to_spaced(big), "3 12 3");
  EXPECT_EQ(to_display(small), "012");
  EXPECT_EQ(to_display(big), "3 12 3");
  EXPECT_THROW((void)to_plain(big), DomainError);
  std::ostringstream os;
  os << big;
  EXPECT_EQ(os.str(), "3 12 3");
}

TEST(Word, ConcatenationAndOrdering) {
  Word a{0, 1};
  a += Word{2};
  EXPECT_EQ(a, (Word{0, 1, 2}));
  EXPECT_EQ(a + Word{3}, (Word{0, 1, 2, 3}));
  EXPECT_LT((Word{0, 1}), (Word{0, 2}));
}
