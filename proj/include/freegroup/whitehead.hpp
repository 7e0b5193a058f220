#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "freegroup/automorphism.hpp"
#include "freegroup/word.hpp"

namespace freegroup {

/// Visited-state budget for the breadth-first searches. Exceeding it raises
/// ResourceExhausted rather than returning a guess.
struct SearchLimits {
  std::size_t max_states = 1'000'000;
};

/// Edge counts of the Whitehead graph of a cyclic word: one edge between x
/// and y^-1 for every cyclically adjacent pair xy.
///
/// For a type-2 move with letter set A and multiplier m the cyclic length
/// changes by (edges leaving A) - (occurrences of m^{+-1}), which lets a scan
/// over all type-2 moves run without rewriting the word.
class WhiteheadGraph {
 public:
  explicit WhiteheadGraph(const CyclicWord& w);

  long long length_change(const MultiplierMove& move) const;
  long long length_change(std::uint64_t letter_set, Letter multiplier) const;

 private:
  int vertices_;
  std::vector<long long> edges_;       // vertices_ x vertices_, symmetric
  std::vector<long long> occurrences_;  // per generator index
};

struct DescentStep {
  WhiteheadAut move;
  std::size_t length;  // cyclic length after the move
};

struct MinimizationResult {
  CyclicWord input;
  CyclicWord minimal;
  AutomorphismChain chain;
  std::vector<DescentStep> steps;
};

struct PrimitivityVerdict {
  bool primitive = false;
  MinimizationResult witness;
};

struct OrbitEquivalence {
  bool equivalent = false;
  MinimizationResult first;
  MinimizationResult second;
  /// When equivalent: moves carrying first.minimal to second.minimal through
  /// words of the same length.
  std::optional<AutomorphismChain> bridge;

  /// When equivalent: a chain carrying the cyclic core of the first word to
  /// that of the second.
  std::optional<AutomorphismChain> connecting_chain() const;
};

/// Greedy strict descent: repeatedly applies the first type-2 move (in
/// enumeration order) that shortens the cyclic word, until none does.
MinimizationResult minimize(const CyclicWord& cw);

PrimitivityVerdict is_primitive(const Word& w);

OrbitEquivalence orbit_equivalent(const Word& u, const Word& v, SearchLimits limits = {});

/// Every primitive cyclic word of length <= max_len, sorted shortlex.
std::vector<CyclicWord> enumerate_primitives(Rank rank, std::size_t max_len, SearchLimits limits = {});

/// True when no type-2 move shortens `cw`; checked by direct application.
bool is_type2_fixed_point(const CyclicWord& cw);

}  // namespace freegroup
