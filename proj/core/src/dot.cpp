#include <sstream>

#include "vsta/io.hpp"

namespace vsta {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const VsaStore& store, NodeLabel root) {
  std::ostringstream os;
  os << "digraph vsa {\n";
  os << "  rankdir=TB;\n";
  const auto nodes = reachable_nodes(store, root);
  for (NodeLabel n : nodes) {
    const auto& node = store.node(n);
    os << "  n" << n.value << " [";
    switch (node.kind) {
      case NodeKind::Union:
        os << "shape=ellipse, label=\"U\"";
        break;
      case NodeKind::Join:
        os << "shape=box, label=" << quote(node.head.name);
        break;
      case NodeKind::Set: {
        std::string text = "{";
        for (std::size_t i = 0; i < node.terms.size(); ++i) {
          if (i > 0) text += ", ";
          text += print_term(node.terms[i]);
        }
        text += "}";
        os << "shape=note, label=" << quote(text);
        break;
      }
    }
    if (n == root) os << ", penwidth=2";
    os << "];\n";
  }
  for (NodeLabel n : nodes) {
    const auto& node = store.node(n);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      os << "  n" << n.value << " -> n" << node.children[i].value;
      if (node.kind == NodeKind::Join && node.children.size() > 1) {
        os << " [taillabel=\"" << i + 1 << "\"]";
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const TreeAutomaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n";
  os << "  rankdir=BT;\n";
  for (std::uint32_t q = 0; q < a.num_states(); ++q) {
    os << "  s" << q << " [shape=ellipse, label=" << quote(a.state_name(StateId{q}));
    if (a.is_final(StateId{q})) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& t : a.transitions()) {
    os << "  t" << t.id << " [shape=box, label=" << quote(t.head.name) << "];\n";
  }
  for (const auto& t : a.transitions()) {
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      os << "  s" << t.children[i].value << " -> t" << t.id << " [headlabel=\"" << i + 1
         << "\"];\n";
    }
    for (StateId target : t.targets) os << "  t" << t.id << " -> s" << target.value << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace vsta
