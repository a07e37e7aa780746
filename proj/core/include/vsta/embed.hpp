#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vsta/automaton.hpp"
#include "vsta/vsa.hpp"

namespace vsta {

/// Automaton built from a normalized VSA: one state per union node, one
/// factored transition per join node, and the root union's state as the
/// only final state.
struct EmbeddingResult {
  TreeAutomaton automaton;
  StateId root_state;
  /// union_of_state[q] is the union node that became state q.
  std::vector<NodeLabel> union_of_state;
  /// join_of_transition[i] is the join node that became factored
  /// transition i.
  std::vector<NodeLabel> join_of_transition;
  VsaSizeReport vsa_size;
  TaSizeReport ta_size;

  std::optional<StateId> state_of_union(NodeLabel u) const;
};

/// Embeds the VSA in O(V+E) time and space. States are numbered in
/// post-order of a depth-first walk from the root (so every state comes
/// after the states its transitions read) and named "q<union label>".
///
/// Throws InvalidVsaError if the reachable DAG breaks the union/join
/// alternation or holds two joins with equal head and children.
EmbeddingResult embed(const VsaStore& store, const NormalizedVsa& v);

/// One size equality of the embedding.
struct LinearityCheck {
  std::string name;
  std::size_t automaton_side = 0;
  std::size_t vsa_side = 0;
  bool holds() const { return automaton_side == vsa_side; }
};

struct LinearityReport {
  std::vector<LinearityCheck> checks;
  bool holds() const;
};

/// Compares the automaton against the VSA it came from:
///   states               == union nodes
///   factored transitions == join nodes
///   expanded transitions == union->join edges
///   sum of arities       == join->union edges
LinearityReport check_linearity(const VsaStore& store, const NormalizedVsa& v,
                                const EmbeddingResult& r);

}  // namespace vsta
