#include "freegroup/word_io.hpp"

#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace freegroup {
namespace {

TEST(ParseWordTest, StandardSyntax) {
  Rank r(3);
  Word w = parse_word("a1 a2^3 a1^-1", r);
  EXPECT_EQ(w.length(), 5U);
  EXPECT_EQ(format_word(w), "a1 a2^3 a1^-1");
  EXPECT_EQ(parse_word("a1a2", r), parse_word("a1 a2", r));
  EXPECT_EQ(parse_word("a1*a2", r), parse_word("a1 a2", r));
  EXPECT_EQ(parse_word("a2^1", r), parse_word("a2", r));
  EXPECT_EQ(parse_word("  a3  ", r), parse_word("a3", r));
}

TEST(ParseWordTest, IdentityForms) {
  Rank r(2);
  EXPECT_TRUE(parse_word("1", r).empty());
  EXPECT_TRUE(parse_word("", r).empty());
  EXPECT_TRUE(parse_word("a1 a1^-1", r).empty());
  EXPECT_EQ(format_word(Word(r)), "1");
}

TEST(ParseWordTest, ReducesOnParse) {
  Rank r(2);
  EXPECT_EQ(format_word(parse_word("a1 a2 a2^-1 a1", r)), "a1^2");
  EXPECT_EQ(format_word(parse_word("a1^3 a1^-2", r)), "a1");
}

TEST(ParseWordTest, Errors) {
  Rank r(2);
  EXPECT_THROW(parse_word("a0", r), ParseError);
  EXPECT_THROW(parse_word("a1^0", r), ParseError);
  EXPECT_THROW(parse_word("a1^", r), ParseError);
  EXPECT_THROW(parse_word("b1", r), ParseError);
  EXPECT_THROW(parse_word("a", r), ParseError);
  EXPECT_THROW(parse_word("a1 1", r), ParseError);
  EXPECT_THROW(parse_word("a3", r), DomainError);
}

TEST(ParseWordTest, Shorthand) {
  Rank r(2);
  Word w = parse_word("abA", r, Syntax::kShorthand);
  EXPECT_EQ(w, parse_word("a1 a2 a1^-1", r));
  EXPECT_EQ(format_word(w, Syntax::kShorthand), "abA");
  EXPECT_EQ(format_word(parse_word("a1^2 a2^-2", r), Syntax::kShorthand), "aaBB");
  EXPECT_THROW(parse_word("a1", r, Syntax::kShorthand), ParseError);
}

TEST(ParseWordTest, RoundTripRandomWords) {
  std::mt19937_64 rng(17);
  for (int n : {1, 2, 5, 12}) {
    Rank r(n);
    for (int trial = 0; trial < 300; ++trial) {
      Word w = testing::random_word_up_to(r, 15, rng);
      EXPECT_EQ(parse_word(format_word(w), r), w);
      EXPECT_EQ(parse_word(format_word(w, Syntax::kShorthand), r, Syntax::kShorthand), w);
    }
  }
}

TEST(TupleTest, ParseAndFormat) {
  Rank r(2);
  auto t = parse_tuple("a1; a1^2 a2", r);
  ASSERT_EQ(t.size(), 2U);
  EXPECT_EQ(format_tuple(t), "a1; a1^2 a2");
  EXPECT_TRUE(parse_tuple("  ", r).empty());
  EXPECT_THROW(parse_tuple("a1;;a2", r), ParseError);
}

TEST(TupleTest, MaxGeneratorIndex) {
  EXPECT_EQ(max_generator_index("a1; a7^-2 a3"), 7);
  EXPECT_EQ(max_generator_index("1"), 1);
  EXPECT_EQ(max_generator_index("aC", Syntax::kShorthand), 3);
}

}  // namespace
}  // namespace freegroup
