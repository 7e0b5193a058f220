#include "freegroup/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "freegroup/word_io.hpp"

namespace freegroup {

namespace {

void push_reduced(LetterSeq& out, Letter x) {
  if (!out.empty() && out.back() == x.inverse()) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

void require_rank(Rank expected, Rank actual) {
  if (expected != actual) {
    throw RankMismatch("rank mismatch: automorphism of rank " + std::to_string(expected.value()) +
                       " applied to rank " + std::to_string(actual.value()));
  }
}

char action_code(Action a) {
  switch (a) {
    case Action::kFix: return 'F';
    case Action::kRightMult: return 'R';
    case Action::kLeftMult: return 'L';
    case Action::kConjugate: return 'C';
  }
  return '?';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

// A single letter written as `a3` or `a3^-1`.
Letter parse_single_letter(std::string_view text) {
  LetterSeq seq = parse_letters(text);
  if (seq.size() != 1) throw ParseError("expected a single letter, got \"" + std::string(text) + "\"");
  return seq.front();
}

int parse_generator(std::string_view text) {
  Letter x = parse_single_letter(text);
  if (x.sign() < 0) throw ParseError("expected a generator, got \"" + std::string(text) + "\"");
  return x.index();
}

}  // namespace

// ---------------------------------------------------------------------------

SignedPermutation::SignedPermutation(std::vector<Letter> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("signed permutation needs rank >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (Letter y : images_) {
    auto i = static_cast<std::size_t>(y.index() - 1);
    if (i >= images_.size() || seen[i]) throw DomainError("signed permutation images must permute the generators");
    seen[i] = true;
  }
}

SignedPermutation SignedPermutation::identity(Rank rank) {
  std::vector<Letter> images;
  for (int i = 1; i <= rank.value(); ++i) images.push_back(Letter::gen(i));
  return SignedPermutation(std::move(images));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<Letter> inv(images_.size(), Letter::gen(1));
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Letter y = images_[i];
    inv[static_cast<std::size_t>(y.index() - 1)] = Letter(static_cast<int>(i) + 1, y.sign());
  }
  return SignedPermutation(std::move(inv));
}

// ---------------------------------------------------------------------------

MultiplierMove::MultiplierMove(Letter multiplier, std::vector<Action> actions)
    : multiplier_(multiplier), actions_(std::move(actions)) {
  if (multiplier_.index() > static_cast<int>(actions_.size())) {
    throw DomainError("multiplier a" + std::to_string(multiplier_.index()) + " out of rank " +
                      std::to_string(actions_.size()));
  }
  if (action(multiplier_.index()) != Action::kFix) {
    throw DomainError("multiplier generator must not carry an action");
  }
}

MultiplierMove MultiplierMove::identity(Rank rank) {
  return MultiplierMove(Letter::gen(1), std::vector<Action>(static_cast<std::size_t>(rank.value()), Action::kFix));
}

bool MultiplierMove::appends_to(Letter x) const {
  if (x.index() == multiplier_.index()) return false;
  Action a = action(x.index());
  if (a == Action::kConjugate) return true;
  return x.sign() > 0 ? a == Action::kRightMult : a == Action::kLeftMult;
}

bool MultiplierMove::prepends_to(Letter x) const { return appends_to(x.inverse()); }

std::uint64_t MultiplierMove::letter_set() const {
  if (actions_.size() > 32) throw DomainError("letter_set supports rank at most 32");
  std::uint64_t mask = std::uint64_t{1} << multiplier_.code();
  for (int j = 1; j <= static_cast<int>(actions_.size()); ++j) {
    if (appends_to(Letter::gen(j))) mask |= std::uint64_t{1} << Letter::gen(j).code();
    if (appends_to(Letter::inv(j))) mask |= std::uint64_t{1} << Letter::inv(j).code();
  }
  return mask;
}

// ---------------------------------------------------------------------------

Rank rank_of(const WhiteheadAut& aut) {
  return std::visit([](const auto& a) { return a.rank(); }, aut);
}

WhiteheadAut inverse(const WhiteheadAut& aut) {
  return std::visit([](const auto& a) -> WhiteheadAut { return a.inverse(); }, aut);
}

namespace {

struct ImageWriter {
  LetterSeq& out;

  void operator()(const SignedPermutation& p, Letter x) const { push_reduced(out, p.image(x)); }

  void operator()(const MultiplierMove& m, Letter x) const {
    if (m.prepends_to(x)) push_reduced(out, m.multiplier().inverse());
    push_reduced(out, x);
    if (m.appends_to(x)) push_reduced(out, m.multiplier());
  }
};

}  // namespace

Word apply_to_word(const WhiteheadAut& aut, const Word& w) {
  require_rank(rank_of(aut), w.rank());
  LetterSeq out;
  out.reserve(w.length() + w.length() / 2 + 2);
  ImageWriter writer{out};
  std::visit(
      [&](const auto& a) {
        for (Letter x : w.letters()) writer(a, x);
      },
      aut);
  return Word::reduce(w.rank(), out);
}

CyclicWord apply_to_cyclic(const WhiteheadAut& aut, const CyclicWord& cw) {
  return cyclic_reduce(apply_to_word(aut, cw.linear())).core;
}

std::vector<Word> generator_images(const WhiteheadAut& aut) {
  Rank rank = rank_of(aut);
  std::vector<Word> images;
  for (int i = 1; i <= rank.value(); ++i) images.push_back(apply_to_word(aut, Word::generator(rank, i)));
  return images;
}

// ---------------------------------------------------------------------------

AutomorphismChain::AutomorphismChain(Rank rank, std::vector<WhiteheadAut> moves) : rank_(rank) {
  for (auto& m : moves) push_back(std::move(m));
}

void AutomorphismChain::push_back(WhiteheadAut aut) {
  require_rank(rank_, rank_of(aut));
  moves_.push_back(std::move(aut));
}

AutomorphismChain AutomorphismChain::inverse() const {
  AutomorphismChain inv(rank_);
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) inv.push_back(freegroup::inverse(*it));
  return inv;
}

Word compose(const AutomorphismChain& chain, const Word& w) {
  require_rank(chain.rank(), w.rank());
  Word result = w;
  for (const auto& move : chain.moves()) result = apply_to_word(move, result);
  return result;
}

CyclicWord compose(const AutomorphismChain& chain, const CyclicWord& cw) {
  return cyclic_reduce(compose(chain, cw.linear())).core;
}

// ---------------------------------------------------------------------------

std::size_t type2_count(Rank rank) {
  std::size_t count = 2 * static_cast<std::size_t>(rank.value());
  for (int i = 1; i < rank.value(); ++i) count *= 4;
  return count;
}

std::size_t type1_count(Rank rank) {
  std::size_t count = 1;
  for (int i = 1; i <= rank.value(); ++i) count *= 2 * static_cast<std::size_t>(i);
  return count;
}

std::vector<MultiplierMove> enumerate_type2(Rank rank) {
  const int n = rank.value();
  std::vector<MultiplierMove> moves;
  moves.reserve(type2_count(rank));
  const std::size_t assignments = type2_count(rank) / (2 * static_cast<std::size_t>(n));
  for (int code = 0; code < 2 * n; ++code) {
    Letter m = Letter::from_code(code);
    for (std::size_t counter = 0; counter < assignments; ++counter) {
      std::vector<Action> actions(static_cast<std::size_t>(n), Action::kFix);
      std::size_t rest = counter;
      for (int j = n; j >= 1; --j) {
        if (j == m.index()) continue;
        actions[static_cast<std::size_t>(j - 1)] = static_cast<Action>(rest % 4);
        rest /= 4;
      }
      moves.emplace_back(m, std::move(actions));
    }
  }
  return moves;
}

std::vector<SignedPermutation> enumerate_type1(Rank rank) {
  const int n = rank.value();
  std::vector<SignedPermutation> perms;
  perms.reserve(type1_count(rank));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  do {
    for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << n); ++signs) {
      std::vector<Letter> images;
      for (int i = 0; i < n; ++i) {
        images.emplace_back(order[static_cast<std::size_t>(i)], ((signs >> (n - 1 - i)) & 1U) ? -1 : +1);
      }
      perms.emplace_back(std::move(images));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return perms;
}

AutomorphismChain random_chain(Rank rank, std::size_t depth, std::uint64_t seed) {
  AutomorphismChain chain(rank);
  if (depth == 0) return chain;
  auto type1 = enumerate_type1(rank);
  auto type2 = enumerate_type2(rank);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, type1.size() + type2.size() - 1);
  for (std::size_t i = 0; i < depth; ++i) {
    std::size_t k = pick(rng);
    if (k < type1.size()) {
      chain.push_back(type1[k]);
    } else {
      chain.push_back(type2[k - type1.size()]);
    }
  }
  return chain;
}

// ---------------------------------------------------------------------------

std::string format_move(const WhiteheadAut& aut) {
  std::string out;
  if (const auto* p = std::get_if<SignedPermutation>(&aut)) {
    out = "perm: ";
    auto images = p->images();
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (i > 0) out += ", ";
      out += "a" + std::to_string(i + 1) + "->" + format_letters(images.subspan(i, 1));
    }
    return out;
  }
  const auto& m = std::get<MultiplierMove>(aut);
  Letter mult = m.multiplier();
  out = "mult m=" + format_letters(std::span<const Letter>(&mult, 1)) + ";";
  bool first = true;
  for (int j = 1; j <= m.rank().value(); ++j) {
    if (j == mult.index()) continue;
    out += first ? " " : ", ";
    first = false;
    out += "a" + std::to_string(j) + ":" + action_code(m.action(j));
  }
  return out;
}

WhiteheadAut parse_move(std::string_view text, Rank rank) {
  const auto n = static_cast<std::size_t>(rank.value());
  text = trim(text);
  if (text.starts_with("perm:")) {
    std::vector<Letter> images(n, Letter::gen(1));
    std::vector<bool> given(n, false);
    for (auto entry : split(text.substr(5), ',')) {
      auto arrow = entry.find("->");
      if (arrow == std::string_view::npos) throw ParseError("expected 'aI->image' in \"" + std::string(entry) + "\"");
      int i = parse_generator(trim(entry.substr(0, arrow)));
      if (i > rank.value() || given[static_cast<std::size_t>(i - 1)]) {
        throw ParseError("bad or repeated source generator in \"" + std::string(text) + "\"");
      }
      images[static_cast<std::size_t>(i - 1)] = parse_single_letter(trim(entry.substr(arrow + 2)));
      given[static_cast<std::size_t>(i - 1)] = true;
    }
    if (std::find(given.begin(), given.end(), false) != given.end()) {
      throw ParseError("permutation must list every generator: \"" + std::string(text) + "\"");
    }
    try {
      return SignedPermutation(std::move(images));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (text.starts_with("mult m=")) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("expected ';' after multiplier in \"" + std::string(text) + "\"");
    Letter m = parse_single_letter(text.substr(7, semi - 7));
    if (m.index() > rank.value()) throw ParseError("multiplier out of rank in \"" + std::string(text) + "\"");
    std::vector<Action> actions(n, Action::kFix);
    std::vector<bool> given(n, false);
    given[static_cast<std::size_t>(m.index() - 1)] = true;
    auto rest = trim(text.substr(semi + 1));
    if (!rest.empty()) {
      for (auto entry : split(rest, ',')) {
        auto colon = entry.find(':');
        if (colon == std::string_view::npos || colon + 2 != entry.size()) {
          throw ParseError("expected 'aJ:X' in \"" + std::string(entry) + "\"");
        }
        int j = parse_generator(entry.substr(0, colon));
        if (j > rank.value() || given[static_cast<std::size_t>(j - 1)]) {
          throw ParseError("bad or repeated generator in \"" + std::string(text) + "\"");
        }
        given[static_cast<std::size_t>(j - 1)] = true;
        switch (entry[colon + 1]) {
          case 'F': actions[static_cast<std::size_t>(j - 1)] = Action::kFix; break;
          case 'R': actions[static_cast<std::size_t>(j - 1)] = Action::kRightMult; break;
          case 'L': actions[static_cast<std::size_t>(j - 1)] = Action::kLeftMult; break;
          case 'C': actions[static_cast<std::size_t>(j - 1)] = Action::kConjugate; break;
          default: throw ParseError("unknown action in \"" + std::string(entry) + "\"");
        }
      }
    }
    if (std::find(given.begin(), given.end(), false) != given.end()) {
      throw ParseError("multiplier move must list every other generator: \"" + std::string(text) + "\"");
    }
    return MultiplierMove(m, std::move(actions));
  }
  throw ParseError("unrecognized move \"" + std::string(text) + "\"");
}

}  // namespace freegroup
