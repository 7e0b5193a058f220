#include "freegroup/whitehead.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace freegroup {

WhiteheadGraph::WhiteheadGraph(const CyclicWord& w)
    : vertices_(2 * w.rank().value()),
      edges_(static_cast<std::size_t>(vertices_ * vertices_), 0),
      occurrences_(static_cast<std::size_t>(w.rank().value()) + 1, 0) {
  auto s = w.letters();
  for (std::size_t k = 0; k < s.size(); ++k) {
    Letter x = s[k];
    Letter y = s[(k + 1) % s.size()];
    int a = x.code();
    int b = y.inverse().code();
    edges_[static_cast<std::size_t>(a * vertices_ + b)] += 1;
    edges_[static_cast<std::size_t>(b * vertices_ + a)] += 1;
    occurrences_[static_cast<std::size_t>(x.index())] += 1;
  }
}

long long WhiteheadGraph::length_change(std::uint64_t letter_set, Letter multiplier) const {
  long long cut = 0;
  for (int u = 0; u < vertices_; ++u) {
    if (!((letter_set >> u) & 1U)) continue;
    const long long* row = &edges_[static_cast<std::size_t>(u * vertices_)];
    for (int v = 0; v < vertices_; ++v) {
      if (!((letter_set >> v) & 1U)) cut += row[v];
    }
  }
  return cut - occurrences_[static_cast<std::size_t>(multiplier.index())];
}

long long WhiteheadGraph::length_change(const MultiplierMove& move) const {
  return length_change(move.letter_set(), move.multiplier());
}

namespace {

struct Type2Table {
  std::vector<MultiplierMove> moves;
  std::vector<std::uint64_t> masks;

  explicit Type2Table(Rank rank) : moves(enumerate_type2(rank)) {
    masks.reserve(moves.size());
    for (const auto& m : moves) masks.push_back(m.letter_set());
  }
};

// Applies the move and checks the predicted length; a mismatch means the
// graph formula and the rewriting disagree, which must never pass silently.
CyclicWord apply_checked(const MultiplierMove& move, const CyclicWord& w, long long change) {
  CyclicWord image = apply_to_cyclic(move, w);
  if (static_cast<long long>(image.length()) != static_cast<long long>(w.length()) + change) {
    throw VerificationFailure("Whitehead graph length prediction disagrees with rewriting");
  }
  return image;
}

MinimizationResult minimize_with(const Type2Table& table, const CyclicWord& cw) {
  MinimizationResult result{cw, cw, AutomorphismChain(cw.rank()), {}};
  while (result.minimal.length() > 1) {
    WhiteheadGraph graph(result.minimal);
    bool reduced = false;
    for (std::size_t i = 0; i < table.moves.size(); ++i) {
      long long change = graph.length_change(table.masks[i], table.moves[i].multiplier());
      if (change >= 0) continue;
      result.minimal = apply_checked(table.moves[i], result.minimal, change);
      result.chain.push_back(table.moves[i]);
      result.steps.push_back({table.moves[i], result.minimal.length()});
      reduced = true;
      break;
    }
    if (!reduced) break;
  }
  return result;
}

struct SearchNode {
  CyclicWord word;
  std::size_t parent;
  std::optional<WhiteheadAut> via;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

// Breadth-first search over all Whitehead moves from `start`, keeping images
// whose length passes `keep`. Stops early once `goal` (if set) is reached.
template <typename Keep>
std::vector<SearchNode> breadth_first(const CyclicWord& start, Keep keep, const CyclicWord* goal,
                                      SearchLimits limits) {
  Rank rank = start.rank();
  auto type1 = enumerate_type1(rank);
  Type2Table type2(rank);

  std::vector<SearchNode> nodes;
  std::unordered_map<CyclicWord, std::size_t> seen;
  nodes.push_back({start, kRoot, std::nullopt});
  seen.emplace(start, 0);
  if (goal != nullptr && *goal == start) return nodes;

  auto visit = [&](CyclicWord image, std::size_t parent, const WhiteheadAut& move) -> bool {
    if (seen.contains(image)) return false;
    if (nodes.size() >= limits.max_states) {
      throw ResourceExhausted("search exceeded " + std::to_string(limits.max_states) + " states");
    }
    seen.emplace(image, nodes.size());
    bool hit = goal != nullptr && *goal == image;
    nodes.push_back({std::move(image), parent, move});
    return hit;
  };

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const CyclicWord current = nodes[head].word;
    for (const auto& p : type1) {
      if (visit(apply_to_cyclic(p, current), head, p)) return nodes;
    }
    WhiteheadGraph graph(current);
    for (std::size_t i = 0; i < type2.moves.size(); ++i) {
      long long change = graph.length_change(type2.masks[i], type2.moves[i].multiplier());
      if (!keep(static_cast<long long>(current.length()) + change)) continue;
      if (visit(apply_checked(type2.moves[i], current, change), head, type2.moves[i])) return nodes;
    }
  }
  return nodes;
}

}  // namespace

MinimizationResult minimize(const CyclicWord& cw) { return minimize_with(Type2Table(cw.rank()), cw); }

PrimitivityVerdict is_primitive(const Word& w) {
  MinimizationResult witness = minimize(cyclic_reduce(w).core);
  bool primitive = witness.minimal.length() == 1;
  return {primitive, std::move(witness)};
}

bool is_type2_fixed_point(const CyclicWord& cw) {
  for (const auto& move : enumerate_type2(cw.rank())) {
    if (apply_to_cyclic(move, cw).length() < cw.length()) return false;
  }
  return true;
}

std::optional<AutomorphismChain> OrbitEquivalence::connecting_chain() const {
  if (!equivalent || !bridge) return std::nullopt;
  AutomorphismChain chain = first.chain;
  for (const auto& m : bridge->moves()) chain.push_back(m);
  AutomorphismChain back = second.chain.inverse();
  for (const auto& m : back.moves()) chain.push_back(m);
  return chain;
}

OrbitEquivalence orbit_equivalent(const Word& u, const Word& v, SearchLimits limits) {
  if (u.rank() != v.rank()) throw RankMismatch("orbit_equivalent: operands have different ranks");
  Type2Table table(u.rank());
  OrbitEquivalence out{false, minimize_with(table, cyclic_reduce(u).core),
                       minimize_with(table, cyclic_reduce(v).core), std::nullopt};
  const CyclicWord& source = out.first.minimal;
  const CyclicWord& target = out.second.minimal;
  if (source.length() != target.length()) return out;

  const long long level = static_cast<long long>(source.length());
  auto nodes = breadth_first(source, [level](long long len) { return len == level; }, &target, limits);
  if (nodes.back().word != target) return out;

  std::vector<WhiteheadAut> path;
  for (std::size_t i = nodes.size() - 1; nodes[i].parent != kRoot; i = nodes[i].parent) {
    path.push_back(*nodes[i].via);
  }
  std::reverse(path.begin(), path.end());
  out.equivalent = true;
  out.bridge = AutomorphismChain(u.rank(), std::move(path));
  return out;
}

std::vector<CyclicWord> enumerate_primitives(Rank rank, std::size_t max_len, SearchLimits limits) {
  if (max_len < 1) throw PreconditionError("enumerate_primitives: max_len must be at least 1");
  CyclicWord start = CyclicWord::from_cyclically_reduced(rank, {Letter::gen(1)});
  const auto bound = static_cast<long long>(max_len);
  auto nodes = breadth_first(start, [bound](long long len) { return len <= bound; }, nullptr, limits);
  std::vector<CyclicWord> words;
  words.reserve(nodes.size());
  for (auto& node : nodes) words.push_back(std::move(node.word));
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace freegroup
