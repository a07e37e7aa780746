#include "vsta/embed.hpp"

#include <algorithm>
#include <vector>

#include "vsta/error.hpp"

namespace vsta {

std::optional<StateId> EmbeddingResult::state_of_union(NodeLabel u) const {
  for (std::size_t i = 0; i < union_of_state.size(); ++i) {
    if (union_of_state[i] == u) return StateId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

namespace {

constexpr std::uint32_t kUnvisited = 0xffffffffu;
constexpr std::uint32_t kOpen = 0xfffffffeu;

class Embedder {
 public:
  // Labels are dense and every node reachable from `root` has a label no
  // larger than root's, so a flat array indexed by label suffices.
  Embedder(const VsaStore& store, NodeLabel root)
      : store_(store), ids_(root.value + 1, kUnvisited) {}

  EmbeddingResult run(NodeLabel root) {
    if (store_.kind(root) != NodeKind::Union) {
      throw InvalidVsaError("normalized VSA must be rooted at a union node");
    }
    // Frames of an explicit post-order walk: node and next child index.
    std::vector<std::pair<NodeLabel, std::size_t>> stack;
    open(root, stack);
    while (!stack.empty()) {
      auto& [n, next] = stack.back();
      const auto& node = store_.node(n);
      if (next < node.children.size()) {
        const NodeLabel c = node.children[next++];
        const std::uint32_t id = id_of(c);
        if (id == kOpen) throw InvalidVsaError("cycle in VSA");
        if (id == kUnvisited) open(c, stack);
        continue;
      }
      const NodeLabel done = n;
      stack.pop_back();
      close(done);
    }

    EmbeddingResult r;
    r.root_state = StateId{id_of(root)};
    a_.add_final(r.root_state);
    r.automaton = std::move(a_);
    r.union_of_state = std::move(unions_);
    r.join_of_transition = std::move(joins_);
    r.vsa_size = size_;
    r.ta_size = ta_size(r.automaton);
    return r;
  }

 private:
  std::uint32_t id_of(NodeLabel n) const {
    return ids_[n.value];
  }

  void open(NodeLabel n, std::vector<std::pair<NodeLabel, std::size_t>>& stack) {
    const auto& node = store_.node(n);
    const NodeKind want = node.kind == NodeKind::Union ? NodeKind::Join : NodeKind::Union;
    if (node.kind == NodeKind::Set) throw InvalidVsaError("set node in a normalized VSA");
    for (NodeLabel c : node.children) {
      if (store_.kind(c) != want) {
        throw InvalidVsaError("edge " + std::to_string(n.value) + " -> " +
                              std::to_string(c.value) + " breaks union/join alternation");
      }
    }
    ids_[n.value] = kOpen;
    stack.emplace_back(n, 0);
  }

  void close(NodeLabel n) {
    const auto& node = store_.node(n);
    if (node.kind == NodeKind::Join) {
      ++size_.joins;
      size_.join_edges += node.children.size();
      kids_.clear();
      for (NodeLabel c : node.children) kids_.push_back(StateId{ids_[c.value]});
      const std::size_t before = a_.transitions().size();
      const std::size_t t = a_.add_transitions(node.head, kids_, {});
      if (a_.transitions().size() == before) {
        throw InvalidVsaError("two join nodes over '" + node.head.name +
                              "' share their children");
      }
      ids_[n.value] = static_cast<std::uint32_t>(t);
      joins_.push_back(n);
      return;
    }
    ++size_.unions;
    size_.union_edges += node.children.size();
    const StateId q = a_.add_state("q" + std::to_string(n.value));
    ids_[n.value] = q.value;
    unions_.push_back(n);
    for (NodeLabel c : node.children) a_.add_target(ids_[c.value], q);
  }

  const VsaStore& store_;
  TreeAutomaton a_;
  std::vector<std::uint32_t> ids_;
  std::vector<StateId> kids_;  // scratch for close()
  std::vector<NodeLabel> unions_;
  std::vector<NodeLabel> joins_;
  VsaSizeReport size_;
};

}  // namespace

EmbeddingResult embed(const VsaStore& store, const NormalizedVsa& v) {
  return Embedder(store, v.root()).run(v.root());
}

bool LinearityReport::holds() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LinearityCheck& c) { return c.holds(); });
}

LinearityReport check_linearity(const VsaStore& store, const NormalizedVsa& v,
                                const EmbeddingResult& r) {
  const VsaSizeReport vs = vsa_size(store, v);
  const TaSizeReport ts = ta_size(r.automaton);
  LinearityReport rep;
  rep.checks = {
      {"states == unions", ts.states, vs.unions},
      {"factored transitions == joins", ts.factored_transitions, vs.joins},
      {"expanded transitions == union->join edges", ts.expanded_transitions, vs.union_edges},
      {"sum of arities == join->union edges", ts.arity_sum, vs.join_edges},
  };
  return rep;
}

}  // namespace vsta
