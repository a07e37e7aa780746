#include "vsta/vsa.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "vsta/error.hpp"

namespace vsta {

namespace {

void add_term_symbols(Signature& sig, const Term& t) {
  sig.add(t.head());
  for (const Term& c : t.children()) add_term_symbols(sig, c);
}

}  // namespace

std::size_t VsaStore::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<std::string>{}(k.head));
  mix(k.arity);
  for (NodeLabel c : k.children) mix(c.value);
  for (const Term& t : k.terms) mix(t.hash());
  return h;
}

void VsaStore::check_label(NodeLabel l) const {
  if (!contains(l)) {
    throw std::out_of_range("node label " + std::to_string(l.value) +
                            " does not belong to this store");
  }
}

NodeLabel VsaStore::intern(Key key, Node node) {
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const NodeLabel label{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(std::move(node));
  index_.emplace(std::move(key), label);
  return label;
}

NodeLabel VsaStore::mk_set(std::vector<Term> terms) {
  sort_unique(terms);
  Signature extended = signature_;
  for (const Term& t : terms) add_term_symbols(extended, t);
  signature_ = std::move(extended);
  Key key{NodeKind::Set, {}, 0, {}, terms};
  return intern(std::move(key), Node{NodeKind::Set, {}, {}, std::move(terms)});
}

NodeLabel VsaStore::mk_union(std::span<const NodeLabel> children) {
  std::vector<NodeLabel> unique;
  unique.reserve(children.size());
  for (NodeLabel c : children) {
    check_label(c);
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
  }
  Key key{NodeKind::Union, {}, 0, unique, {}};
  return intern(std::move(key), Node{NodeKind::Union, {}, std::move(unique), {}});
}

NodeLabel VsaStore::mk_join(const Symbol& head, std::span<const NodeLabel> children) {
  if (children.size() != head.arity) {
    throw ArityError("join over '" + head.name + "' needs " + std::to_string(head.arity) +
                     " children, given " + std::to_string(children.size()));
  }
  for (NodeLabel c : children) check_label(c);
  signature_.add(head);
  std::vector<NodeLabel> kids(children.begin(), children.end());
  Key key{NodeKind::Join, head.name, head.arity, kids, {}};
  return intern(std::move(key), Node{NodeKind::Join, head, std::move(kids), {}});
}

std::vector<NodeLabel> reachable_nodes(const VsaStore& store, NodeLabel root) {
  std::vector<bool> seen(store.size(), false);
  std::vector<NodeLabel> stack{root};
  std::vector<NodeLabel> out;
  seen.at(root.value) = true;
  while (!stack.empty()) {
    NodeLabel n = stack.back();
    stack.pop_back();
    out.push_back(n);
    for (NodeLabel c : store.node(n).children) {
      if (!seen[c.value]) {
        seen[c.value] = true;
        stack.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Per-node emptiness for every node reachable from root, computed in
// ascending label order (children first).
std::vector<std::int8_t> emptiness(const VsaStore& store, std::span<const NodeLabel> order) {
  std::vector<std::int8_t> empty(store.size(), -1);
  for (NodeLabel n : order) {
    const auto& node = store.node(n);
    bool e = false;
    switch (node.kind) {
      case NodeKind::Set:
        e = node.terms.empty();
        break;
      case NodeKind::Union:
        e = std::all_of(node.children.begin(), node.children.end(),
                        [&](NodeLabel c) { return empty[c.value] == 1; });
        break;
      case NodeKind::Join:
        e = std::any_of(node.children.begin(), node.children.end(),
                        [&](NodeLabel c) { return empty[c.value] == 1; });
        break;
    }
    empty[n.value] = e ? 1 : 0;
  }
  return empty;
}

class Enumerator {
 public:
  Enumerator(const VsaStore& store, std::size_t limit, std::vector<std::int8_t> empty)
      : store_(store), limit_(limit), empty_(std::move(empty)), memo_(store.size()) {}

  // Only called on non-empty nodes. Every non-empty node reached this way
  // denotes at most as many terms as the root, so overflow here is exact.
  const std::vector<Term>& denote(NodeLabel n) {
    auto& slot = memo_[n.value];
    if (slot) return *slot;
    const auto& node = store_.node(n);
    std::vector<Term> out;
    switch (node.kind) {
      case NodeKind::Set:
        out = node.terms;
        break;
      case NodeKind::Union:
        for (NodeLabel c : node.children) {
          if (empty_[c.value] == 1) continue;
          const auto& part = denote(c);
          out.insert(out.end(), part.begin(), part.end());
          if (out.size() > limit_) sort_unique(out);
          if (out.size() > limit_) throw OverflowError(limit_);
        }
        sort_unique(out);
        break;
      case NodeKind::Join:
        out = product(node);
        break;
    }
    if (out.size() > limit_) throw OverflowError(limit_);
    slot = std::move(out);
    return *slot;
  }

 private:
  std::vector<Term> product(const VsaStore::Node& node) {
    std::vector<const std::vector<Term>*> parts;
    std::size_t total = 1;
    for (NodeLabel c : node.children) {
      const auto& p = denote(c);
      parts.push_back(&p);
      total *= p.size();
      if (total > limit_) throw OverflowError(limit_);
    }
    // Children are sorted, so the odometer below yields sorted output.
    std::vector<Term> out;
    out.reserve(total);
    std::vector<std::size_t> idx(parts.size(), 0);
    for (std::size_t produced = 0; produced < total; ++produced) {
      std::vector<Term> args;
      args.reserve(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) args.push_back((*parts[i])[idx[i]]);
      out.emplace_back(node.head, std::move(args));
      for (std::size_t i = parts.size(); i-- > 0;) {
        if (++idx[i] < parts[i]->size()) break;
        idx[i] = 0;
      }
    }
    return out;
  }

  const VsaStore& store_;
  std::size_t limit_;
  std::vector<std::int8_t> empty_;
  std::vector<std::optional<std::vector<Term>>> memo_;
};

}  // namespace

bool is_empty_vsa(const VsaStore& store, NodeLabel root) {
  const auto order = reachable_nodes(store, root);
  return emptiness(store, order)[root.value] == 1;
}

std::vector<Term> enumerate_vsa(const VsaStore& store, NodeLabel root, std::size_t limit) {
  const auto order = reachable_nodes(store, root);
  auto empty = emptiness(store, order);
  if (empty[root.value] == 1) return {};
  Enumerator e(store, limit, std::move(empty));
  return e.denote(root);
}

VsaSizeReport vsa_size(const VsaStore& store, NodeLabel root) {
  VsaSizeReport r;
  for (NodeLabel n : reachable_nodes(store, root)) {
    const auto& node = store.node(n);
    switch (node.kind) {
      case NodeKind::Set:
        ++r.sets;
        break;
      case NodeKind::Union:
        ++r.unions;
        r.union_edges += node.children.size();
        break;
      case NodeKind::Join:
        ++r.joins;
        r.join_edges += node.children.size();
        break;
    }
  }
  return r;
}

}  // namespace vsta
