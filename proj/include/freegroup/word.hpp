#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "freegroup/errors.hpp"

namespace freegroup {

/// Number of free generators of the ambient group F_n.
class Rank {
 public:
  explicit Rank(int n) : n_(n) {
    if (n < 1) throw DomainError("rank must be at least 1");
  }
  int value() const { return n_; }
  friend bool operator==(Rank, Rank) = default;

 private:
  int n_;
};

/// A generator a_i or its inverse. Stored as the signed index (+i or -i).
///
/// Letters are totally ordered index-major with the positive letter first:
/// a1 < a1^-1 < a2 < a2^-1 < ...
class Letter {
 public:
  Letter(int index, int sign);

  static Letter gen(int index) { return Letter(index, +1); }
  static Letter inv(int index) { return Letter(index, -1); }
  /// From the signed form (+i / -i).
  static Letter from_signed(int value);
  /// From the dense code 0..2n-1 (see code()).
  static Letter from_code(int code) { return Letter(code / 2 + 1, code % 2 == 0 ? +1 : -1); }

  int index() const { return value_ < 0 ? -value_ : value_; }
  int sign() const { return value_ < 0 ? -1 : +1; }
  int signed_value() const { return value_; }
  /// Dense position in the letter order: 2(i-1) for a_i, 2(i-1)+1 for a_i^-1.
  int code() const { return 2 * (index() - 1) + (value_ < 0 ? 1 : 0); }
  Letter inverse() const { return Letter(-value_); }

  friend bool operator==(Letter, Letter) = default;
  friend std::strong_ordering operator<=>(Letter a, Letter b) { return a.code() <=> b.code(); }

 private:
  explicit Letter(int value) : value_(value) {}
  std::int32_t value_;
};

using LetterSeq = std::vector<Letter>;

/// Freely reduced word in F_n. Immutable; the empty word is the identity.
class Word {
 public:
  explicit Word(Rank rank) : rank_(rank) {}

  /// Freely reduces `raw`; throws DomainError if a letter index exceeds the rank.
  static Word reduce(Rank rank, std::span<const Letter> raw);
  static Word generator(Rank rank, int index, int exponent = 1);

  Rank rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word(Rank rank, LetterSeq letters) : rank_(rank), letters_(std::move(letters)) {}
  friend class CyclicWord;
  friend Word multiply(const Word&, const Word&);
  friend Word invert(const Word&);

  Rank rank_;
  LetterSeq letters_;
};

/// Conjugacy class of F_n: a cyclically reduced word stored in its least
/// rotation, so equality is plain sequence equality.
class CyclicWord {
 public:
  explicit CyclicWord(Rank rank) : rank_(rank) {}

  /// Canonicalizes a cyclically reduced sequence; throws DomainError otherwise.
  static CyclicWord from_cyclically_reduced(Rank rank, LetterSeq letters);

  Rank rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// The canonical rotation read as an element.
  Word linear() const { return Word(rank_, letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  /// Shortlex order; used only for deterministic sorting.
  friend bool operator<(const CyclicWord& a, const CyclicWord& b);

 private:
  CyclicWord(Rank rank, LetterSeq letters) : rank_(rank), letters_(std::move(letters)) {}

  Rank rank_;
  LetterSeq letters_;
};

/// Result of cyclic_reduce.
///
/// With `raw` the cyclically reduced middle of w (before canonicalization):
///   w   = conjugator * raw * conjugator^-1
///   core = raw rotated left by `rotation` letters
/// so w = element_conjugator() * core.linear() * element_conjugator()^-1.
struct CyclicReduction {
  CyclicWord core;
  Word conjugator;
  std::size_t rotation = 0;

  Word element_conjugator() const;
};

Word free_reduce(std::span<const Letter> raw, Rank rank);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, int exponent);
CyclicReduction cyclic_reduce(const Word& w);
/// Least rotation of a cyclically reduced sequence. Throws DomainError if the
/// input is not cyclically reduced.
CyclicWord canonical_rotation(std::span<const Letter> letters, Rank rank);
/// Index k such that rotating `letters` left by k gives the least rotation.
std::size_t least_rotation_offset(std::span<const Letter> letters);
std::size_t cyclic_length(const Word& w);
std::vector<long long> abelianize(const Word& w);
bool is_cyclically_reduced(std::span<const Letter> letters);

}  // namespace freegroup

template <>
struct std::hash<freegroup::CyclicWord> {
  std::size_t operator()(const freegroup::CyclicWord& w) const noexcept;
};

template <>
struct std::hash<freegroup::Word> {
  std::size_t operator()(const freegroup::Word& w) const noexcept;
};
