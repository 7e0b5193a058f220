#include "freegroup/basis.hpp"

#include <random>

#include <gtest/gtest.h>

#include "freegroup/whitehead.hpp"
#include "freegroup/word_io.hpp"
#include "test_support.hpp"

namespace freegroup {
namespace {

using testing::random_tuple;
using testing::random_word_up_to;

WordTuple T(const char* text, int rank) { return WordTuple(Rank(rank), parse_tuple(text, Rank(rank))); }
Word W(const char* text, int rank) { return parse_word(text, Rank(rank)); }

WordTuple random_basis(Rank r, std::size_t depth, std::mt19937_64& rng) {
  AutomorphismChain chain = random_chain(r, depth, rng());
  std::vector<Word> words;
  for (int j = 1; j <= r.value(); ++j) words.push_back(compose(chain, Word::generator(r, j)));
  return WordTuple(r, std::move(words));
}

TEST(FoldTest, StandardBasisIsBouquet) {
  for (int n = 1; n <= 5; ++n) {
    FoldedGraph g = fold(standard_basis(Rank(n)));
    EXPECT_EQ(g.vertex_count(), 1);
    EXPECT_EQ(g.edges().size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(g.is_bouquet());
  }
}

TEST(FoldTest, SingleGeneratorIsOneLoop) {
  FoldedGraph g = fold(T("a1", 2));
  EXPECT_EQ(g.vertex_count(), 1);
  ASSERT_EQ(g.edges().size(), 1U);
  EXPECT_EQ(g.edges()[0], (LabeledEdge{0, 1, 0}));
  EXPECT_FALSE(g.is_bouquet());
}

TEST(FoldTest, ProductFoldsToBouquet) {
  FoldedGraph g = fold(T("a1 a2; a2", 2));
  EXPECT_TRUE(g.is_bouquet());
  EXPECT_EQ(g.edge_list(), "0 -a1-> 0\n0 -a2-> 0\n");
}

TEST(FoldTest, ConjugateKeepsStem) {
  // <a1 a2 a1^-1> : base -a1-> v with an a2 loop at v.
  FoldedGraph g = fold(T("a1 a2 a1^-1", 2));
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_list(), "0 -a1-> 1\n1 -a2-> 1\n");
  EXPECT_TRUE(g.reads(W("a1 a2^5 a1^-1", 2)));
  EXPECT_FALSE(g.reads(W("a2", 2)));
}

TEST(FoldTest, EmptyTupleAndIdentityEntries) {
  FoldedGraph g = fold(T("1; 1", 2));
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_TRUE(g.edges().empty());
  EXPECT_TRUE(g.reads(Word(Rank(2))));
}

TEST(FoldTest, ConfluentUnderProcessingOrder) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 500; ++trial) {
    Rank r(2 + trial % 3);
    WordTuple t = random_tuple(r, 1 + trial % 4, 8, rng);
    FoldedGraph reference = fold(t);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      EXPECT_EQ(fold(t, rng()), reference) << format_tuple(t.words());
    }
  }
}

TEST(FoldTest, ReadsEveryGeneratorAndProducts) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 300; ++trial) {
    Rank r(2 + trial % 3);
    WordTuple t = random_tuple(r, 1 + trial % 4, 8, rng);
    FoldedGraph g = fold(t);
    Word product(r);
    for (const auto& w : t.words()) {
      EXPECT_TRUE(g.reads(w));
      EXPECT_TRUE(g.reads(invert(w)));
      product = multiply(product, w);
    }
    EXPECT_TRUE(g.reads(product));
  }
}

TEST(IsGeneratingTest, Examples) {
  EXPECT_TRUE(is_generating(standard_basis(Rank(3))));
  EXPECT_FALSE(is_generating(T("a1", 2)));
  EXPECT_TRUE(is_generating(T("a1; a1^2 a2", 2)));
  EXPECT_TRUE(is_generating(T("a1; a2; a1 a2", 2)));
  EXPECT_FALSE(is_generating(T("a2 a1; a1 a2^2", 2)));
}

TEST(IsBasisTest, Examples) {
  EXPECT_TRUE(is_basis(standard_basis(Rank(4))));
  EXPECT_FALSE(is_basis(T("a1; a1", 2)));
  EXPECT_FALSE(is_basis(T("a1^2; a2", 2)));
  EXPECT_FALSE(is_basis(T("a1; a2; a1 a2", 2)));
  EXPECT_TRUE(is_basis(T("a1 a2; a2", 2)));
}

TEST(IsBasisTest, ImagesOfStandardBasisUnderChains) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    EXPECT_TRUE(is_basis(random_basis(Rank(2 + trial % 3), 1 + trial % 10, rng)));
  }
}

TEST(IsBasisTest, InvariantUnderNielsenMoves) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 400; ++trial) {
    Rank r(2 + trial % 2);
    WordTuple t = trial % 2 == 0 ? random_basis(r, 4, rng) : random_tuple(r, static_cast<std::size_t>(r.value()), 5, rng);
    bool expected = is_basis(t);
    std::vector<Word> w(t.words().begin(), t.words().end());
    std::uniform_int_distribution<std::size_t> idx(0, w.size() - 1);
    std::size_t i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);

    auto swapped = w;
    std::swap(swapped[i], swapped[j]);
    EXPECT_EQ(is_basis(WordTuple(r, swapped)), expected);

    auto inverted = w;
    inverted[i] = invert(inverted[i]);
    EXPECT_EQ(is_basis(WordTuple(r, inverted)), expected);

    for (int sign : {1, -1}) {
      auto transvected = w;
      transvected[i] = multiply(w[i], sign > 0 ? w[j] : invert(w[j]));
      EXPECT_EQ(is_basis(WordTuple(r, transvected)), expected);
      transvected[i] = multiply(sign > 0 ? w[j] : invert(w[j]), w[i]);
      EXPECT_EQ(is_basis(WordTuple(r, transvected)), expected);
    }
  }
}

TEST(AbelianFilterTest, Examples) {
  EXPECT_TRUE(abelian_det_filter(standard_basis(Rank(3))));
  EXPECT_EQ(abelian_determinant(T("a1^2; a2", 2)), 2);
  EXPECT_FALSE(abelian_det_filter(T("a1^2; a2", 2)));
  EXPECT_TRUE(abelian_det_filter(T("a1 a2; a2", 2)));
  EXPECT_EQ(abelian_determinant(T("a2; a1", 2)), -1);
  EXPECT_EQ(abelian_determinant(T("a1 a2 a1^-1 a2^-1; a2", 2)), 0);
  EXPECT_THROW(abelian_det_filter(T("a1", 2)), PreconditionError);
}

TEST(AbelianFilterTest, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 300; ++trial) {
    WordTuple t = random_tuple(Rank(3), 3, 8, rng);
    std::vector<std::vector<long long>> m;
    for (const auto& w : t.words()) m.push_back(abelianize(w));
    long long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    EXPECT_EQ(abelian_determinant(t), det);
  }
}

TEST(AbelianFilterTest, NecessaryForBasis) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    Rank r(2 + trial % 2);
    WordTuple t = random_tuple(r, static_cast<std::size_t>(r.value()), 6, rng);
    if (!abelian_det_filter(t)) EXPECT_FALSE(is_basis(t));
    if (is_basis(t)) EXPECT_TRUE(abelian_det_filter(t));
  }
}

TEST(CompleteToBasisTest, Examples) {
  EXPECT_EQ(complete_to_basis(W("a1", 2)), standard_basis(Rank(2)));
  for (const char* text : {"a1 a2", "a1^2 a2", "a2^-1 a1^3 a2 a1^-1 a2", "a1^-1"}) {
    Word w = W(text, 2);
    WordTuple t = complete_to_basis(w);
    EXPECT_TRUE(is_basis(t)) << text;
    EXPECT_EQ(t[0], w);
  }
  EXPECT_THROW(complete_to_basis(W("a1^2 a2^2", 2)), PreconditionError);
  EXPECT_THROW(complete_to_basis(Word(Rank(2))), PreconditionError);
}

TEST(CompleteToBasisTest, RandomPrimitives) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    Rank r(1 + trial % 4);
    Word g = random_word_up_to(r, 4, rng);
    Word w = multiply(multiply(g, compose(random_chain(r, 1 + trial % 7, rng()), Word::generator(r, 1))), invert(g));
    WordTuple t = complete_to_basis(w);
    EXPECT_TRUE(is_basis(t)) << format_word(w);
    EXPECT_EQ(t[0], w);
  }
}

TEST(WordTupleTest, RejectsMixedRanks) {
  EXPECT_THROW(WordTuple(Rank(2), {W("a1", 2), W("a1", 3)}), RankMismatch);
}

}  // namespace
}  // namespace freegroup
