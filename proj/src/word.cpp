#include "freegroup/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace freegroup {

Letter::Letter(int index, int sign) : value_(sign > 0 ? index : -index) {
  if (index < 1) throw DomainError("letter index must be positive, got " + std::to_string(index));
  if (sign != 1 && sign != -1) throw DomainError("letter sign must be +1 or -1");
}

Letter Letter::from_signed(int value) {
  if (value == 0) throw DomainError("letter index must be positive, got 0");
  return Letter(value);
}

namespace {

void check_rank(Rank rank, Letter x) {
  if (x.index() > rank.value()) {
    throw DomainError("letter a" + std::to_string(x.index()) + " out of rank " +
                      std::to_string(rank.value()));
  }
}

void push_reduced(LetterSeq& out, Letter x) {
  if (!out.empty() && out.back() == x.inverse()) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

void require_same_rank(Rank a, Rank b) {
  if (a != b) {
    throw RankMismatch("rank mismatch: " + std::to_string(a.value()) + " vs " +
                       std::to_string(b.value()));
  }
}

}  // namespace

Word Word::reduce(Rank rank, std::span<const Letter> raw) {
  LetterSeq out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    check_rank(rank, x);
    push_reduced(out, x);
  }
  return Word(rank, std::move(out));
}

Word Word::generator(Rank rank, int index, int exponent) {
  Letter x(index, exponent < 0 ? -1 : +1);
  check_rank(rank, x);
  return Word(rank, LetterSeq(static_cast<std::size_t>(std::abs(exponent)), x));
}

Word free_reduce(std::span<const Letter> raw, Rank rank) { return Word::reduce(rank, raw); }

Word multiply(const Word& u, const Word& v) {
  require_same_rank(u.rank(), v.rank());
  LetterSeq out(u.letters_);
  out.reserve(u.length() + v.length());
  for (Letter x : v.letters_) push_reduced(out, x);
  return Word(u.rank(), std::move(out));
}

Word invert(const Word& w) {
  LetterSeq out;
  out.reserve(w.length());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(w.rank(), std::move(out));
}

Word power(const Word& w, int exponent) {
  Word base = exponent < 0 ? invert(w) : w;
  Word result(w.rank());
  for (int i = 0; i < std::abs(exponent); ++i) result = multiply(result, base);
  return result;
}

bool is_cyclically_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == letters[i - 1].inverse()) return false;
  }
  return letters.size() < 2 || letters.front() != letters.back().inverse();
}

std::size_t least_rotation_offset(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  // Two-candidate scan for the minimal rotation, linear time.
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = s[(i + k) % n];
    Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord canonical_rotation(std::span<const Letter> letters, Rank rank) {
  return CyclicWord::from_cyclically_reduced(rank, LetterSeq(letters.begin(), letters.end()));
}

CyclicWord CyclicWord::from_cyclically_reduced(Rank rank, LetterSeq letters) {
  for (Letter x : letters) check_rank(rank, x);
  if (!is_cyclically_reduced(letters)) throw DomainError("sequence is not cyclically reduced");
  std::size_t offset = least_rotation_offset(letters);
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(offset), letters.end());
  return CyclicWord(rank, std::move(letters));
}

bool operator<(const CyclicWord& a, const CyclicWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                      b.letters_.end());
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto s = w.letters();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo] == s[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  LetterSeq raw(s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi));
  std::size_t offset = least_rotation_offset(raw);
  Word conjugator = Word::reduce(w.rank(), s.first(lo));
  CyclicWord core = CyclicWord::from_cyclically_reduced(w.rank(), std::move(raw));
  return CyclicReduction{std::move(core), std::move(conjugator), offset};
}

Word CyclicReduction::element_conjugator() const {
  // raw = p * core * p^-1 where p is the first `rotation` letters of raw,
  // i.e. the last `rotation` letters of core.
  auto c = core.letters();
  auto p = c.subspan(c.size() - rotation);
  return multiply(conjugator, Word::reduce(core.rank(), p));
}

std::size_t cyclic_length(const Word& w) {
  auto s = w.letters();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo] == s[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return hi - lo;
}

std::vector<long long> abelianize(const Word& w) {
  std::vector<long long> coords(static_cast<std::size_t>(w.rank().value()), 0);
  for (Letter x : w.letters()) coords[static_cast<std::size_t>(x.index() - 1)] += x.sign();
  return coords;
}

}  // namespace freegroup

namespace {
std::size_t hash_letters(std::span<const freegroup::Letter> letters, int rank) {
  std::size_t h = static_cast<std::size_t>(rank) * 0x9e3779b97f4a7c15ULL;
  for (auto x : letters) {
    h ^= static_cast<std::size_t>(x.code() + 1) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
}  // namespace

std::size_t std::hash<freegroup::CyclicWord>::operator()(const freegroup::CyclicWord& w) const noexcept {
  return hash_letters(w.letters(), w.rank().value());
}

std::size_t std::hash<freegroup::Word>::operator()(const freegroup::Word& w) const noexcept {
  return hash_letters(w.letters(), w.rank().value());
}
