#include "freegroup/word_io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace freegroup {

namespace {

constexpr int kMaxIndex = 1 << 20;
constexpr int kMaxExponent = 1 << 20;

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '*'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }
  void skip_ws() {
    while (!done() && is_ws(peek())) ++pos_;
  }

  int digits(const char* what, int limit) {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    long long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > limit) fail(std::string(what) + " too large");
      advance();
    }
    return static_cast<int>(value);
  }

  // Optional `^` `-`? digits; returns 1 when absent.
  int exponent() {
    if (done() || peek() != '^') return 1;
    advance();
    bool negative = false;
    if (!done() && peek() == '-') {
      negative = true;
      advance();
    }
    int e = digits("exponent", kMaxExponent);
    if (e == 0) fail("exponent must be nonzero");
    return negative ? -e : e;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_power(LetterSeq& out, Letter x, int exponent) {
  Letter y = exponent < 0 ? x.inverse() : x;
  out.insert(out.end(), static_cast<std::size_t>(exponent < 0 ? -exponent : exponent), y);
}

}  // namespace

LetterSeq parse_letters(std::string_view text, Syntax syntax) {
  std::string_view body = trim(text);
  LetterSeq out;
  if (body == "1") return out;
  Cursor cur(body);
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    char c = cur.peek();
    Letter x = Letter::gen(1);
    if (syntax == Syntax::kStandard) {
      if (c != 'a') cur.fail("expected generator 'a<index>'");
      cur.advance();
      int index = cur.digits("generator index", kMaxIndex);
      if (index == 0) cur.fail("generator index must be positive");
      x = Letter::gen(index);
    } else {
      if (c >= 'a' && c <= 'z') {
        x = Letter::gen(c - 'a' + 1);
      } else if (c >= 'A' && c <= 'Z') {
        x = Letter::inv(c - 'A' + 1);
      } else {
        cur.fail("expected shorthand letter");
      }
      cur.advance();
    }
    append_power(out, x, cur.exponent());
  }
  return out;
}

Word parse_word(std::string_view text, Rank rank, Syntax syntax) {
  return Word::reduce(rank, parse_letters(text, syntax));
}

std::string format_letters(std::span<const Letter> letters, Syntax syntax) {
  if (letters.empty()) return "1";
  std::string out;
  if (syntax == Syntax::kShorthand) {
    for (Letter x : letters) {
      if (x.index() > 26) throw DomainError("shorthand syntax supports rank at most 26");
      out += static_cast<char>((x.sign() > 0 ? 'a' : 'A') + x.index() - 1);
    }
    return out;
  }
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    long long run = static_cast<long long>(j - i) * letters[i].sign();
    if (!out.empty()) out += ' ';
    out += 'a';
    out += std::to_string(letters[i].index());
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

std::string format_word(const Word& w, Syntax syntax) { return format_letters(w.letters(), syntax); }

std::string format_cyclic(const CyclicWord& w, Syntax syntax) { return format_letters(w.letters(), syntax); }

std::vector<std::string_view> split_tuple(std::string_view text) {
  std::vector<std::string_view> parts;
  if (trim(text).empty()) return parts;
  while (true) {
    auto pos = text.find(';');
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return parts;
}

std::vector<Word> parse_tuple(std::string_view text, Rank rank, Syntax syntax) {
  std::vector<Word> words;
  for (auto part : split_tuple(text)) {
    if (trim(part).empty()) throw ParseError("empty entry in tuple \"" + std::string(text) + "\"");
    words.push_back(parse_word(part, rank, syntax));
  }
  return words;
}

std::string format_tuple(std::span<const Word> words, Syntax syntax) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += "; ";
    out += format_word(words[i], syntax);
  }
  return out;
}

int max_generator_index(std::string_view text, Syntax syntax) {
  int best = 1;
  for (auto part : split_tuple(text)) {
    for (Letter x : parse_letters(part, syntax)) best = std::max(best, x.index());
  }
  return best;
}

}  // namespace freegroup
