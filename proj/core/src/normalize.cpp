#include <unordered_map>

#include "vsta/error.hpp"
#include "vsta/vsa.hpp"

namespace vsta {

NodeLabel term_to_join(VsaStore& store, const Term& t) {
  std::vector<NodeLabel> kids;
  kids.reserve(t.children().size());
  for (const Term& c : t.children()) kids.push_back(store.mk_union({term_to_join(store, c)}));
  return store.mk_join(t.head(), kids);
}

namespace {

class SetEliminator {
 public:
  explicit SetEliminator(VsaStore& store) : store_(store) {}

  NodeLabel run(NodeLabel n) {
    if (auto it = memo_.find(n.value); it != memo_.end()) return it->second;
    const VsaStore::Node node = store_.node(n);  // copy: the arena may grow
    NodeLabel out;
    switch (node.kind) {
      case NodeKind::Set: {
        std::vector<NodeLabel> joins;
        joins.reserve(node.terms.size());
        for (const Term& t : node.terms) joins.push_back(term_to_join(store_, t));
        out = store_.mk_union(joins);
        break;
      }
      case NodeKind::Union:
        out = store_.mk_union(rebuild(node.children));
        break;
      case NodeKind::Join:
        out = store_.mk_join(node.head, rebuild(node.children));
        break;
    }
    memo_.emplace(n.value, out);
    return out;
  }

 private:
  std::vector<NodeLabel> rebuild(const std::vector<NodeLabel>& children) {
    std::vector<NodeLabel> out;
    out.reserve(children.size());
    for (NodeLabel c : children) out.push_back(run(c));
    return out;
  }

  VsaStore& store_;
  std::unordered_map<std::uint32_t, NodeLabel> memo_;
};

class Normalizer {
 public:
  explicit Normalizer(VsaStore& store) : store_(store) {}

  // A union-layer node denoting the same set as n.
  NodeLabel as_union(NodeLabel n) {
    if (auto it = unions_.find(n.value); it != unions_.end()) return it->second;
    const VsaStore::Node node = store_.node(n);
    NodeLabel out;
    switch (node.kind) {
      case NodeKind::Set: {
        std::vector<NodeLabel> joins;
        joins.reserve(node.terms.size());
        for (const Term& t : node.terms) joins.push_back(term_to_join(store_, t));
        out = store_.mk_union(joins);
        break;
      }
      case NodeKind::Union: {
        std::vector<NodeLabel> joins;
        for (NodeLabel c : node.children) {
          if (store_.kind(c) == NodeKind::Join) {
            joins.push_back(as_join(c));
          } else {
            const auto spliced = store_.node(as_union(c)).children;
            joins.insert(joins.end(), spliced.begin(), spliced.end());
          }
        }
        out = store_.mk_union(joins);
        break;
      }
      case NodeKind::Join:
        out = store_.mk_union({as_join(n)});
        break;
    }
    unions_.emplace(n.value, out);
    return out;
  }

  NodeLabel as_join(NodeLabel n) {
    if (auto it = joins_.find(n.value); it != joins_.end()) return it->second;
    const VsaStore::Node node = store_.node(n);
    std::vector<NodeLabel> kids;
    kids.reserve(node.children.size());
    for (NodeLabel c : node.children) kids.push_back(as_union(c));
    const NodeLabel out = store_.mk_join(node.head, kids);
    joins_.emplace(n.value, out);
    return out;
  }

 private:
  VsaStore& store_;
  std::unordered_map<std::uint32_t, NodeLabel> unions_;
  std::unordered_map<std::uint32_t, NodeLabel> joins_;
};

}  // namespace

NodeLabel eliminate_set_nodes(VsaStore& store, NodeLabel root) {
  return SetEliminator(store).run(root);
}

NormalizedVsa normalize(VsaStore& store, NodeLabel root) {
  return NormalizedVsa(Normalizer(store).as_union(root));
}

NormalizedVsa as_normalized(VsaStore& store, NodeLabel root) {
  if (store.kind(root) == NodeKind::Join) root = store.mk_union({root});
  for (NodeLabel n : reachable_nodes(store, root)) {
    const auto& node = store.node(n);
    if (node.kind == NodeKind::Set) {
      throw InvalidVsaError("set node " + std::to_string(n.value) + " in a normalized VSA");
    }
    const NodeKind want = node.kind == NodeKind::Union ? NodeKind::Join : NodeKind::Union;
    for (NodeLabel c : node.children) {
      if (store.kind(c) != want) {
        throw InvalidVsaError("edge " + std::to_string(n.value) + " -> " +
                              std::to_string(c.value) + " breaks union/join alternation");
      }
    }
  }
  return NormalizedVsa(root);
}

}  // namespace vsta
