#pragma once

#include <random>
#include <vector>

#include "freegroup/automorphism.hpp"
#include "freegroup/basis.hpp"
#include "freegroup/word.hpp"

namespace freegroup::testing {

inline Letter random_letter(Rank rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> code(0, 2 * rank.value() - 1);
  return Letter::from_code(code(rng));
}

/// Uniform over freely reduced words of exactly `length` letters.
inline Word random_reduced_word(Rank rank, std::size_t length, std::mt19937_64& rng) {
  LetterSeq s;
  while (s.size() < length) {
    Letter x = random_letter(rank, rng);
    if (!s.empty() && s.back() == x.inverse()) continue;
    s.push_back(x);
  }
  return Word::reduce(rank, s);
}

inline Word random_word_up_to(Rank rank, std::size_t max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_reduced_word(rank, len(rng), rng);
}

inline WordTuple random_tuple(Rank rank, std::size_t size, std::size_t max_length, std::mt19937_64& rng) {
  std::vector<Word> words;
  for (std::size_t i = 0; i < size; ++i) words.push_back(random_word_up_to(rank, max_length, rng));
  return WordTuple(rank, std::move(words));
}

/// Test-only substitution: replaces every letter by the given image (or its
/// inverse) as raw letters and reduces once at the end.
inline Word substitute(const std::vector<Word>& images, const Word& w) {
  LetterSeq raw;
  for (Letter x : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(x.index() - 1)];
    if (x.sign() > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) raw.push_back(it->inverse());
    }
  }
  return Word::reduce(w.rank(), raw);
}

/// Every cyclically reduced letter sequence of exactly `length` letters.
inline std::vector<LetterSeq> all_cyclically_reduced(Rank rank, std::size_t length) {
  std::vector<LetterSeq> out;
  LetterSeq cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == length) {
      if (is_cyclically_reduced(cur)) out.push_back(cur);
      return;
    }
    for (int c = 0; c < 2 * rank.value(); ++c) {
      Letter x = Letter::from_code(c);
      if (!cur.empty() && cur.back() == x.inverse()) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace freegroup::testing
