#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "freegroup/basis.hpp"
#include "freegroup/word.hpp"

namespace freegroup {

struct ClaimResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
  nlohmann::json certificate;  // null when the claim carries no certificate
};

struct VerificationReport {
  std::string title;
  std::vector<ClaimResult> claims;
  /// Fixed interpretive text. Never computed, never part of the verdict.
  std::vector<std::string> interpretation;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// The explicit family on n >= 2 generators:
///   g   = a1 a2^3 a3^3 ... an^3
///   b_1 = a1, b_2 = a1 a2, b_i = a1 a2^3 ... a_{i-1}^3 a_i (i >= 3)
///   differences[i] = b_i^-1 g
struct WitnessInstance {
  Rank rank;
  Word g;
  WordTuple b;
  std::vector<Word> differences;
};

/// Builds the family and checks that every b_i^-1 g, recomputed by word
/// arithmetic, equals its closed form. Throws PreconditionError for n < 2.
WitnessInstance build_instance(int n);

/// a2^3 ... an^3 for i = 1, a_i^2 a_{i+1}^3 ... a_n^3 for i >= 2 (index i-1).
std::vector<Word> closed_form_differences(Rank rank);

/// a1^k1 ... am^km in F_n with m <= n and every k > 1: not primitive, and no
/// single Whitehead move (either type) shortens it.
VerificationReport verify_power_product(int n, const std::vector<int>& exponents);

/// Claims C0..C3 on the family built by build_instance(n).
VerificationReport verify_witness_family(int n);
/// Same claims on a caller-supplied (possibly corrupted) instance:
///   C0 differences equal their closed forms   C1 g is primitive
///   C2 b is a basis                           C3 every difference is non-primitive
VerificationReport verify_witness_family(const WitnessInstance& instance);

/// If w is primitive, extends it to an explicit verified basis; otherwise
/// the report fails with the minimization fixed point as evidence.
VerificationReport verify_basis_extension(int n, const Word& w);

}  // namespace freegroup
