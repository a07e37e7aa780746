#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "vsta/term.hpp"

namespace vsta {

/// Identity of a node inside one VsaStore. Labels are dense and assigned
/// in creation order, so every child has a smaller label than its parent.
struct NodeLabel {
  std::uint32_t value = 0;

  auto operator<=>(const NodeLabel&) const = default;
};

enum class NodeKind : std::uint8_t { Set, Union, Join };

/// Arena of hash-consed VSA nodes.
///
/// Set nodes hold an explicit set of terms, union nodes denote the union of
/// their children, and a join node with head F denotes every F(P1..Pk) with
/// Pi drawn from child i. Constructing a node whose structure already exists
/// returns the existing label, so no two nodes of one kind ever have the
/// same (head and) children. Union children are deduplicated keeping the
/// first occurrence; their order is significant for identity.
class VsaStore {
 public:
  struct Node {
    NodeKind kind;
    Symbol head;                      // Join only
    std::vector<NodeLabel> children;  // Union and Join
    std::vector<Term> terms;          // Set only; sorted, no duplicates
  };

  NodeLabel mk_set(std::vector<Term> terms);
  NodeLabel mk_union(std::span<const NodeLabel> children);
  NodeLabel mk_union(std::initializer_list<NodeLabel> children) {
    return mk_union(std::span<const NodeLabel>(children.begin(), children.size()));
  }
  /// Throws ArityError when children.size() != head.arity.
  NodeLabel mk_join(const Symbol& head, std::span<const NodeLabel> children);
  NodeLabel mk_join(const Symbol& head, std::initializer_list<NodeLabel> children) {
    return mk_join(head, std::span<const NodeLabel>(children.begin(), children.size()));
  }

  const Node& node(NodeLabel l) const { return nodes_.at(l.value); }
  NodeKind kind(NodeLabel l) const { return node(l).kind; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(NodeLabel l) const { return l.value < nodes_.size(); }

  /// Every symbol that occurs in a join head or a set term.
  const Signature& signature() const { return signature_; }

 private:
  struct Key {
    NodeKind kind;
    std::string head;
    std::uint32_t arity;
    std::vector<NodeLabel> children;
    std::vector<Term> terms;

    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  NodeLabel intern(Key key, Node node);
  void check_label(NodeLabel l) const;

  std::vector<Node> nodes_;
  std::unordered_map<Key, NodeLabel, KeyHash> index_;
  Signature signature_;
};

/// Handle to a union-rooted VSA whose layers strictly alternate between
/// union and join nodes and that contains no set node.
class NormalizedVsa {
 public:
  NodeLabel root() const { return root_; }

  friend bool operator==(const NormalizedVsa&, const NormalizedVsa&) = default;

 private:
  explicit NormalizedVsa(NodeLabel root) : root_(root) {}

  friend NormalizedVsa normalize(VsaStore&, NodeLabel);
  friend NormalizedVsa as_normalized(VsaStore&, NodeLabel);

  NodeLabel root_;
};

/// Labels reachable from `root`, ascending (children before parents).
std::vector<NodeLabel> reachable_nodes(const VsaStore& store, NodeLabel root);

/// Sorted denotation of the node. Throws OverflowError when it has more
/// than `limit` distinct terms.
std::vector<Term> enumerate_vsa(const VsaStore& store, NodeLabel root,
                                std::size_t limit);
inline std::vector<Term> enumerate_vsa(const VsaStore& store, const NormalizedVsa& v,
                                       std::size_t limit) {
  return enumerate_vsa(store, v.root(), limit);
}

/// True iff the node denotes the empty set.
bool is_empty_vsa(const VsaStore& store, NodeLabel root);

/// The join-only encoding of one term: J_F(U(enc(P1)), ..., U(enc(Pk))).
NodeLabel term_to_join(VsaStore& store, const Term& t);

/// Rewrites every set node {P1..Pk} into U(enc(P1), ..., enc(Pk)).
NodeLabel eliminate_set_nodes(VsaStore& store, NodeLabel root);

/// Brings the VSA into strictly alternating union/join form: set nodes are
/// eliminated, nested unions are spliced into their parent, and a join
/// found where a union is required is wrapped in a unary union.
NormalizedVsa normalize(VsaStore& store, NodeLabel root);

/// Checks that `root` is already in normal form and returns the handle; a
/// join root is wrapped in a fresh unary union. Throws InvalidVsaError.
NormalizedVsa as_normalized(VsaStore& store, NodeLabel root);

struct VsaSizeReport {
  std::size_t unions = 0;
  std::size_t joins = 0;
  std::size_t sets = 0;
  /// Edges leaving union nodes (union->join in normal form).
  std::size_t union_edges = 0;
  /// Edges leaving join nodes, counted with multiplicity (join->union in
  /// normal form).
  std::size_t join_edges = 0;

  std::size_t nodes() const { return unions + joins + sets; }
  std::size_t edges() const { return union_edges + join_edges; }
};

VsaSizeReport vsa_size(const VsaStore& store, NodeLabel root);
inline VsaSizeReport vsa_size(const VsaStore& store, const NormalizedVsa& v) {
  return vsa_size(store, v.root());
}

}  // namespace vsta
