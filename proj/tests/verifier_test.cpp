#include "freegroup/verifier.hpp"

#include <gtest/gtest.h>

#include "freegroup/whitehead.hpp"
#include "freegroup/word_io.hpp"

namespace freegroup {
namespace {

Word W(const char* text, int rank) { return parse_word(text, Rank(rank)); }

const ClaimResult& claim(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no claim " + id);
}

TEST(BuildInstanceTest, RankTwo) {
  WitnessInstance inst = build_instance(2);
  EXPECT_EQ(format_word(inst.g), "a1 a2^3");
  EXPECT_EQ(format_tuple(inst.b.words()), "a1; a1 a2");
  EXPECT_EQ(format_tuple(inst.differences), "a2^3; a2^2");
  EXPECT_EQ(multiply(invert(inst.b[1]), inst.g), W("a2^2", 2));
}

TEST(BuildInstanceTest, RankThreeAndFive) {
  WitnessInstance three = build_instance(3);
  EXPECT_EQ(format_word(three.g), "a1 a2^3 a3^3");
  EXPECT_EQ(format_tuple(three.b.words()), "a1; a1 a2; a1 a2^3 a3");
  EXPECT_EQ(format_word(three.differences[1]), "a2^2 a3^3");
  EXPECT_EQ(format_word(three.differences[2]), "a3^2");

  WitnessInstance five = build_instance(5);
  EXPECT_EQ(format_word(five.b[4]), "a1 a2^3 a3^3 a4^3 a5");
  EXPECT_EQ(format_word(five.differences[0]), "a2^3 a3^3 a4^3 a5^3");
  EXPECT_EQ(format_word(five.differences[3]), "a4^2 a5^3");
}

TEST(BuildInstanceTest, RejectsRankOne) { EXPECT_THROW(build_instance(1), PreconditionError); }

TEST(WitnessFamilyTest, PassesForSmallRanks) {
  for (int n = 2; n <= 6; ++n) {
    VerificationReport r = verify_witness_family(n);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_EQ(r.claims.size(), 4U);
    EXPECT_FALSE(r.interpretation.empty());
  }
}

TEST(WitnessFamilyTest, CorruptedBasisFailsOnlyC2) {
  WitnessInstance inst = build_instance(3);
  std::vector<Word> b(inst.b.words().begin(), inst.b.words().end());
  b[1] = W("a2^2", 3);
  inst.b = WordTuple(inst.rank, b);
  VerificationReport r = verify_witness_family(inst);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(claim(r, "C2").pass);
  EXPECT_TRUE(claim(r, "C0").pass);
  EXPECT_TRUE(claim(r, "C1").pass);
  EXPECT_TRUE(claim(r, "C3").pass);
}

TEST(WitnessFamilyTest, CorruptedGFailsOnlyC1) {
  WitnessInstance inst = build_instance(3);
  inst.g = W("a1^2 a2^3 a3^3", 3);
  VerificationReport r = verify_witness_family(inst);
  EXPECT_FALSE(claim(r, "C1").pass);
  EXPECT_TRUE(claim(r, "C0").pass);
  EXPECT_TRUE(claim(r, "C2").pass);
  EXPECT_TRUE(claim(r, "C3").pass);
}

TEST(WitnessFamilyTest, CorruptedDifferenceWord) {
  // Non-primitive replacement: only the closed form breaks.
  WitnessInstance inst = build_instance(3);
  inst.differences[1] = W("a2^3 a3^3", 3);
  VerificationReport r = verify_witness_family(inst);
  EXPECT_FALSE(claim(r, "C0").pass);
  EXPECT_TRUE(claim(r, "C1").pass);
  EXPECT_TRUE(claim(r, "C2").pass);
  EXPECT_TRUE(claim(r, "C3").pass);

  // Primitive replacement: non-primitivity breaks as well.
  inst.differences[1] = W("a2 a3^3", 3);
  r = verify_witness_family(inst);
  EXPECT_FALSE(claim(r, "C0").pass);
  EXPECT_FALSE(claim(r, "C3").pass);
  EXPECT_TRUE(claim(r, "C1").pass);
  EXPECT_TRUE(claim(r, "C2").pass);
}

TEST(WitnessFamilyTest, DeterministicReports) {
  EXPECT_EQ(verify_witness_family(4).to_json().dump(), verify_witness_family(4).to_json().dump());
}

TEST(PowerProductTest, Examples) {
  EXPECT_TRUE(verify_power_product(2, {2, 2}).passed());
  EXPECT_TRUE(verify_power_product(3, {3, 3}).passed());
  EXPECT_THROW(verify_power_product(2, {2, 1}), PreconditionError);
  EXPECT_TRUE(is_primitive(W("a1^2 a2", 2)).primitive);
  EXPECT_THROW(verify_power_product(2, {2, 2, 2}), PreconditionError);
  EXPECT_THROW(verify_power_product(2, {}), PreconditionError);
  EXPECT_THROW(verify_power_product(2, {-2, 3}), PreconditionError);
}

TEST(PowerProductTest, SweepSmallRanks) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> ks;
        for (int t = 0; t < m; ++t) ks.push_back((mask >> t) & 1 ? 3 : 2);
        VerificationReport r = verify_power_product(n, ks);
        EXPECT_TRUE(r.passed()) << r.to_text();
      }
    }
  }
}

TEST(BasisExtensionTest, Examples) {
  VerificationReport a1 = verify_basis_extension(2, W("a1", 2));
  EXPECT_TRUE(a1.passed());
  EXPECT_EQ(claim(a1, "extends-to-basis").computed, "a1; a2");

  VerificationReport squares = verify_basis_extension(2, W("a1^2 a2^2", 2));
  EXPECT_FALSE(squares.passed());
  EXPECT_FALSE(claim(squares, "primitive").pass);
  EXPECT_FALSE(claim(squares, "primitive").certificate.is_null());

  VerificationReport mixed = verify_basis_extension(2, W("a1^2 a2", 2));
  EXPECT_TRUE(mixed.passed());
  EXPECT_TRUE(claim(mixed, "extends-to-basis").pass);
}

TEST(ReportTest, TextAndJsonShape) {
  VerificationReport r = verify_witness_family(2);
  std::string text = r.to_text();
  EXPECT_NE(text.find("[PASS] C2"), std::string::npos);
  EXPECT_NE(text.find("overall: PASS"), std::string::npos);
  EXPECT_NE(text.find("interpretation (cited, not computed)"), std::string::npos);
  auto j = r.to_json();
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["claims"].size(), 4U);
}

TEST(ReportTest, EmptyReportDoesNotPass) { EXPECT_FALSE(VerificationReport{}.passed()); }

}  // namespace
}  // namespace freegroup
