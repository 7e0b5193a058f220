#include "freegroup/basis.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>
#include <random>

#include "freegroup/automorphism.hpp"
#include "freegroup/whitehead.hpp"

namespace freegroup {

WordTuple::WordTuple(Rank rank, std::vector<Word> words) : rank_(rank), words_(std::move(words)) {
  for (const auto& w : words_) {
    if (w.rank() != rank_) throw RankMismatch("tuple entries must share the tuple's rank");
  }
}

WordTuple standard_basis(Rank rank) {
  std::vector<Word> words;
  for (int i = 1; i <= rank.value(); ++i) words.push_back(Word::generator(rank, i));
  return WordTuple(rank, std::move(words));
}

// ---------------------------------------------------------------------------

FoldedGraph::FoldedGraph(Rank rank, int vertex_count, std::vector<LabeledEdge> edges)
    : rank_(rank),
      vertex_count_(vertex_count),
      edges_(std::move(edges)),
      next_(static_cast<std::size_t>(vertex_count * 2 * rank.value()), -1) {
  std::sort(edges_.begin(), edges_.end());
  const int width = 2 * rank.value();
  for (const auto& e : edges_) {
    next_[static_cast<std::size_t>(e.from * width + Letter::gen(e.label).code())] = e.to;
    next_[static_cast<std::size_t>(e.to * width + Letter::inv(e.label).code())] = e.from;
  }
}

std::optional<int> FoldedGraph::step(int vertex, Letter x) const {
  int t = next_[static_cast<std::size_t>(vertex * 2 * rank_.value() + x.code())];
  if (t < 0) return std::nullopt;
  return t;
}

bool FoldedGraph::reads(const Word& w) const {
  if (w.rank() != rank_) throw RankMismatch("word and graph have different ranks");
  int v = 0;
  for (Letter x : w.letters()) {
    auto t = step(v, x);
    if (!t) return false;
    v = *t;
  }
  return v == 0;
}

bool FoldedGraph::is_bouquet() const {
  if (vertex_count_ != 1 || edges_.size() != static_cast<std::size_t>(rank_.value())) return false;
  for (int label = 1; label <= rank_.value(); ++label) {
    if (!step(0, Letter::gen(label))) return false;
  }
  return true;
}

std::string FoldedGraph::edge_list() const {
  std::string out;
  for (const auto& e : edges_) {
    out += std::to_string(e.from) + " -a" + std::to_string(e.label) + "-> " + std::to_string(e.to) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Mutable folding workspace: union-find over vertices, and for every live
// root a slot per letter holding the vertex reached by reading that letter.
class Folder {
 public:
  Folder(Rank rank, std::optional<std::uint64_t> seed) : width_(2 * rank.value()) {
    if (seed) rng_.emplace(*seed);
    add_vertex();  // base
  }

  void add_loop(const Word& w) {
    if (w.empty()) return;
    int v = 0;
    auto letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      int to = i + 1 == letters.size() ? 0 : add_vertex();
      add_edge(v, letters[i], to);
      v = to;
    }
  }

  void run() {
    while (!pending_.empty()) {
      std::size_t k = 0;
      if (rng_) k = std::uniform_int_distribution<std::size_t>(0, pending_.size() - 1)(*rng_);
      auto [a, b] = pending_[k];
      pending_[k] = pending_.back();
      pending_.pop_back();
      merge(a, b);
    }
    trim();
  }

  FoldedGraph canonical(Rank rank) {
    std::vector<int> label(parent_.size(), -1);
    std::deque<int> queue{find(0)};
    label[static_cast<std::size_t>(find(0))] = 0;
    int next_label = 1;
    std::vector<LabeledEdge> edges;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int c = 0; c < width_; ++c) {
        int t = slot(v, c);
        if (t < 0) continue;
        t = find(t);
        if (label[static_cast<std::size_t>(t)] < 0) {
          label[static_cast<std::size_t>(t)] = next_label++;
          queue.push_back(t);
        }
      }
    }
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
      if (find(v) != v || label[static_cast<std::size_t>(v)] < 0) continue;
      for (int i = 1; i <= width_ / 2; ++i) {
        int t = slot(v, Letter::gen(i).code());
        if (t < 0) continue;
        edges.push_back({label[static_cast<std::size_t>(v)], i, label[static_cast<std::size_t>(find(t))]});
      }
    }
    return FoldedGraph(rank, next_label, std::move(edges));
  }

 private:
  int add_vertex() {
    int v = static_cast<int>(parent_.size());
    parent_.push_back(v);
    slots_.insert(slots_.end(), static_cast<std::size_t>(width_), -1);
    return v;
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  int& slot(int v, int code) { return slots_[static_cast<std::size_t>(v * width_ + code)]; }

  static int inverse_code(int code) { return code ^ 1; }

  void connect(int v, int code, int t) {
    int& s = slot(v, code);
    if (s < 0) {
      s = t;
    } else if (find(s) != find(t)) {
      pending_.emplace_back(s, t);
    }
  }

  void add_edge(int from, Letter x, int to) {
    from = find(from);
    to = find(to);
    connect(from, x.code(), to);
    connect(to, inverse_code(x.code()), from);
    run_queue_if_deterministic();
  }

  void run_queue_if_deterministic() {
    // With a seed, identifications accumulate and are resolved in random
    // order in run(); otherwise they are resolved eagerly.
    if (rng_) return;
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      merge(a, b);
    }
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the base as a root
    parent_[static_cast<std::size_t>(b)] = a;
    for (int c = 0; c < width_; ++c) {
      int t = slot(b, c);
      if (t < 0) continue;
      slot(b, c) = -1;
      connect(a, c, t);
    }
  }

  void trim() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 1; v < static_cast<int>(parent_.size()); ++v) {
        if (find(v) != v) continue;
        int degree = 0, only = -1;
        for (int c = 0; c < width_; ++c) {
          if (slot(v, c) >= 0) {
            ++degree;
            only = c;
          }
        }
        if (degree != 1) continue;
        int t = find(slot(v, only));
        slot(v, only) = -1;
        for (int c = 0; c < width_; ++c) {
          if (slot(t, c) >= 0 && find(slot(t, c)) == v) slot(t, c) = -1;
        }
        changed = true;
      }
    }
  }

  int width_;
  std::vector<int> parent_;
  std::vector<int> slots_;
  std::vector<std::pair<int, int>> pending_;
  std::optional<std::mt19937_64> rng_;
};

}  // namespace

FoldedGraph fold(const WordTuple& t, std::optional<std::uint64_t> order_seed) {
  Folder folder(t.rank(), order_seed);
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  if (order_seed) {
    std::mt19937_64 rng(*order_seed ^ 0x5bd1e995ULL);
    std::shuffle(order.begin(), order.end(), rng);
  }
  for (std::size_t i : order) folder.add_loop(t[i]);
  folder.run();
  return folder.canonical(t.rank());
}

bool is_generating(const WordTuple& t) { return fold(t).is_bouquet(); }

bool is_basis(const WordTuple& t) {
  return t.size() == static_cast<std::size_t>(t.rank().value()) && is_generating(t);
}

// ---------------------------------------------------------------------------

long long abelian_determinant(const WordTuple& t) {
  const auto n = static_cast<std::size_t>(t.rank().value());
  if (t.size() != n) {
    throw PreconditionError("abelianization determinant needs exactly " + std::to_string(n) + " words, got " +
                            std::to_string(t.size()));
  }
  std::vector<std::vector<__int128>> m;
  for (const auto& w : t.words()) {
    auto row = abelianize(w);
    m.emplace_back(row.begin(), row.end());
  }
  // Fraction-free Gaussian elimination.
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 lhs, rhs, diff;
        if (__builtin_mul_overflow(m[i][j], m[k][k], &lhs) || __builtin_mul_overflow(m[i][k], m[k][j], &rhs) ||
            __builtin_sub_overflow(lhs, rhs, &diff)) {
          throw DomainError("abelianization determinant overflow");
        }
        m[i][j] = diff / prev;
      }
    }
    prev = m[k][k];
  }
  __int128 det = sign * m[n - 1][n - 1];
  if (det > LLONG_MAX || det < LLONG_MIN) throw DomainError("abelianization determinant overflow");
  return static_cast<long long>(det);
}

bool abelian_det_filter(const WordTuple& t) {
  long long det = abelian_determinant(t);
  return det == 1 || det == -1;
}

// ---------------------------------------------------------------------------

WordTuple complete_to_basis(const Word& w) {
  const Rank rank = w.rank();
  PrimitivityVerdict verdict = is_primitive(w);
  if (!verdict.primitive) throw PreconditionError("complete_to_basis: input is not primitive");

  // The descent chain carries the core c to a conjugate h x h^-1 of a letter.
  CyclicReduction reduction = cyclic_reduce(w);
  const AutomorphismChain& chain = verdict.witness.chain;
  Word image = compose(chain, reduction.core.linear());
  CyclicReduction image_reduction = cyclic_reduce(image);
  if (image_reduction.core.length() != 1) throw VerificationFailure("descent chain does not reach a letter");
  Letter x = image_reduction.core.letters()[0];
  Word h = image_reduction.element_conjugator();
  Word h_inv = invert(h);

  // Conjugated standard basis through `image`, pulled back along the chain.
  AutomorphismChain back = chain.inverse();
  Word g = reduction.element_conjugator();
  Word g_inv = invert(g);
  std::vector<Word> basis{w};
  for (int j = 1; j <= rank.value(); ++j) {
    if (j == x.index()) continue;
    Word e = multiply(multiply(h, Word::generator(rank, j)), h_inv);
    basis.push_back(multiply(multiply(g, compose(back, e)), g_inv));
  }

  if (compose(back, image) != reduction.core.linear()) {
    throw VerificationFailure("inverse chain does not return to the cyclic core");
  }
  WordTuple result(rank, std::move(basis));
  if (!is_basis(result) || result[0] != w) throw VerificationFailure("completed tuple is not a basis");
  return result;
}

}  // namespace freegroup
