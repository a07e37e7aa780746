#include <set>

#include "vsta/error.hpp"
#include "vsta/testgen.hpp"

namespace vsta::testgen {

namespace {

using TermSet = std::set<Term>;

TermSet denote(const VsaStore& store, NodeLabel n, std::size_t cap);

void extend(const VsaStore::Node& join, const std::vector<TermSet>& args, std::size_t pos,
            std::vector<Term>& prefix, TermSet& out, std::size_t cap) {
  if (pos == args.size()) {
    out.insert(Term(join.head, prefix));
    if (out.size() > cap) throw OverflowError(cap);
    return;
  }
  for (const Term& t : args[pos]) {
    prefix.push_back(t);
    extend(join, args, pos + 1, prefix, out, cap);
    prefix.pop_back();
  }
}

TermSet denote(const VsaStore& store, NodeLabel n, std::size_t cap) {
  const VsaStore::Node& node = store.node(n);
  TermSet out;
  if (node.kind == NodeKind::Set) {
    out.insert(node.terms.begin(), node.terms.end());
  } else if (node.kind == NodeKind::Union) {
    for (NodeLabel c : node.children) {
      TermSet part = denote(store, c, cap);
      out.insert(part.begin(), part.end());
    }
  } else {
    std::vector<TermSet> args;
    for (NodeLabel c : node.children) args.push_back(denote(store, c, cap));
    std::vector<Term> prefix;
    extend(node, args, 0, prefix, out, cap);
  }
  if (out.size() > cap) throw OverflowError(cap);
  return out;
}

}  // namespace

std::vector<Term> oracle_enumerate(const VsaStore& store, NodeLabel root, std::size_t cap) {
  TermSet s = denote(store, root, cap);
  return {s.begin(), s.end()};
}

}  // namespace vsta::testgen
