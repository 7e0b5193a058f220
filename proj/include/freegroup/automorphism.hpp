#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "freegroup/word.hpp"

namespace freegroup {

/// What a type-2 move does to a generator a_j other than the multiplier m.
enum class Action : std::uint8_t {
  kFix,        // a_j -> a_j
  kRightMult,  // a_j -> a_j m
  kLeftMult,   // a_j -> m^-1 a_j
  kConjugate,  // a_j -> m^-1 a_j m
};

/// Type-1 Whitehead automorphism: a permutation of the letters that commutes
/// with inversion, given by the image letter of each generator.
class SignedPermutation {
 public:
  /// images[i-1] is the image of a_i. Throws DomainError unless the indices
  /// form a permutation of 1..n.
  explicit SignedPermutation(std::vector<Letter> images);
  static SignedPermutation identity(Rank rank);

  Rank rank() const { return Rank(static_cast<int>(images_.size())); }
  std::span<const Letter> images() const { return images_; }
  Letter image(Letter x) const {
    Letter y = images_[static_cast<std::size_t>(x.index() - 1)];
    return x.sign() > 0 ? y : y.inverse();
  }
  SignedPermutation inverse() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<Letter> images_;
};

/// Type-2 Whitehead automorphism: fixes the multiplier's generator and sends
/// every other generator through its Action.
class MultiplierMove {
 public:
  /// actions[j-1] is the action on a_j; the multiplier's own slot must be kFix.
  MultiplierMove(Letter multiplier, std::vector<Action> actions);
  static MultiplierMove identity(Rank rank);

  Rank rank() const { return Rank(static_cast<int>(actions_.size())); }
  Letter multiplier() const { return multiplier_; }
  Action action(int index) const { return actions_[static_cast<std::size_t>(index - 1)]; }
  std::span<const Action> actions() const { return actions_; }

  /// Same actions with the multiplier inverted.
  MultiplierMove inverse() const { return MultiplierMove(multiplier_.inverse(), actions_); }

  /// The letter set A of the classical (A, m) notation as a bitmask over
  /// Letter::code(): m, every a_j with R or C, every a_j^-1 with L or C.
  std::uint64_t letter_set() const;

  /// Letters prepended / appended to the image of x (empty for x = m^{+-1}).
  bool prepends_to(Letter x) const;
  bool appends_to(Letter x) const;

  friend bool operator==(const MultiplierMove&, const MultiplierMove&) = default;

 private:
  Letter multiplier_;
  std::vector<Action> actions_;
};

using WhiteheadAut = std::variant<SignedPermutation, MultiplierMove>;

Rank rank_of(const WhiteheadAut& aut);
WhiteheadAut inverse(const WhiteheadAut& aut);
/// Images of a_1..a_n.
std::vector<Word> generator_images(const WhiteheadAut& aut);

Word apply_to_word(const WhiteheadAut& aut, const Word& w);
CyclicWord apply_to_cyclic(const WhiteheadAut& aut, const CyclicWord& cw);

/// Moves applied left to right: compose(chain, w) = tau_s(...tau_1(w)).
class AutomorphismChain {
 public:
  explicit AutomorphismChain(Rank rank) : rank_(rank) {}
  AutomorphismChain(Rank rank, std::vector<WhiteheadAut> moves);

  Rank rank() const { return rank_; }
  std::span<const WhiteheadAut> moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  void push_back(WhiteheadAut aut);

  /// Chain of inverse moves in reverse order.
  AutomorphismChain inverse() const;

  friend bool operator==(const AutomorphismChain&, const AutomorphismChain&) = default;

 private:
  Rank rank_;
  std::vector<WhiteheadAut> moves_;
};

Word compose(const AutomorphismChain& chain, const Word& w);
CyclicWord compose(const AutomorphismChain& chain, const CyclicWord& cw);

/// All 2n * 4^(n-1) type-2 moves: multipliers in letter order, then action
/// assignments counted in base 4 with a_1's action most significant.
std::vector<MultiplierMove> enumerate_type2(Rank rank);
std::size_t type2_count(Rank rank);
/// All n! * 2^n signed permutations: index permutations in lexicographic
/// order, then sign patterns as a binary counter.
std::vector<SignedPermutation> enumerate_type1(Rank rank);
std::size_t type1_count(Rank rank);

/// `depth` moves drawn uniformly from type-1 and type-2 moves together.
AutomorphismChain random_chain(Rank rank, std::size_t depth, std::uint64_t seed);

/// `perm: a1->a2, a2->a1^-1` or `mult m=a2; a1:R, a3:C`.
std::string format_move(const WhiteheadAut& aut);
WhiteheadAut parse_move(std::string_view text, Rank rank);

}  // namespace freegroup
