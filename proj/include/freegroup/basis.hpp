#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freegroup/word.hpp"

namespace freegroup {

/// Ordered list of words over one rank.
class WordTuple {
 public:
  explicit WordTuple(Rank rank) : rank_(rank) {}
  WordTuple(Rank rank, std::vector<Word> words);

  Rank rank() const { return rank_; }
  std::span<const Word> words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

  friend bool operator==(const WordTuple&, const WordTuple&) = default;

 private:
  Rank rank_;
  std::vector<Word> words_;
};

/// Standard basis a_1..a_n.
WordTuple standard_basis(Rank rank);

struct LabeledEdge {
  int from;
  int label;  // generator index; the edge reads a_label forwards, a_label^-1 backwards
  int to;
  friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Folded, trimmed subgroup graph. Vertices are numbered breadth-first from
/// the base (vertex 0), following letters in letter order, so two graphs of
/// the same subgroup compare equal.
class FoldedGraph {
 public:
  FoldedGraph(Rank rank, int vertex_count, std::vector<LabeledEdge> edges);

  Rank rank() const { return rank_; }
  int vertex_count() const { return vertex_count_; }
  std::span<const LabeledEdge> edges() const { return edges_; }

  /// Whether `w` labels a loop at the base, i.e. lies in the subgroup.
  bool reads(const Word& w) const;
  /// One vertex carrying one loop per generator.
  bool is_bouquet() const;
  /// `vertex -aI-> vertex`, one edge per line.
  std::string edge_list() const;

  friend bool operator==(const FoldedGraph&, const FoldedGraph&) = default;

 private:
  std::optional<int> step(int vertex, Letter x) const;

  Rank rank_;
  int vertex_count_;
  std::vector<LabeledEdge> edges_;
  std::vector<int> next_;  // vertex * 2n + letter code -> target, -1 if none
};

/// Folds the wedge of the tuple's words. With `order_seed` the words and the
/// pending identifications are processed in a shuffled order; the result is
/// the same graph either way.
FoldedGraph fold(const WordTuple& t, std::optional<std::uint64_t> order_seed = std::nullopt);

bool is_generating(const WordTuple& t);
bool is_basis(const WordTuple& t);

/// Determinant of the abelianization matrix is +-1. Necessary for a basis.
/// Throws PreconditionError unless the tuple has exactly n entries.
bool abelian_det_filter(const WordTuple& t);
/// Integer determinant of the abelianization matrix (rows = words).
long long abelian_determinant(const WordTuple& t);

/// A verified basis whose first entry is `w`. Throws PreconditionError if `w`
/// is not primitive and VerificationFailure if the construction does not
/// check out.
WordTuple complete_to_basis(const Word& w);

}  // namespace freegroup
