#pragma once

#include <string>
#include <string_view>

#include "vsta/automaton.hpp"
#include "vsta/vsa.hpp"

namespace vsta {

// VSA files are s-expressions:
//
//   vsa := "(U" label node* ")" | "(J" label symbol node* ")"
//        | "(S" term* ")"       | "(ref" label ")"
//
// The first occurrence of a label defines the node; later occurrences must
// use (ref label). Symbol arities are inferred from use.

/// Reads one VSA into `store` and returns its root. Structurally equal
/// nodes in the file are merged by the store. Throws ParseError.
NodeLabel load_vsa(std::string_view text, VsaStore& store);

/// Writes the VSA rooted at `root`, labelling nodes 1, 2, ... in pre-order
/// and emitting each shared union or join once. Ends with a newline.
std::string save_vsa(const VsaStore& store, NodeLabel root);

// Automaton files are line oriented:
//
//   final q3
//   a() -> q1
//   f(q2,q2) -> q3
//
// Blank lines and text after '#' are ignored.

/// Infers the signature from the transitions. Throws ParseError with the
/// line number on malformed lines and arity conflicts.
TreeAutomaton load_ta(std::string_view text);

/// As above, but every symbol must belong to `sig`.
TreeAutomaton load_ta(std::string_view text, const Signature& sig);

/// Final states sorted by name, then expanded transitions sorted by head
/// name, child names and target name.
std::string save_ta(const TreeAutomaton& a);

/// Graphviz rendering of a VSA: unions as ellipses labelled "U", joins as
/// boxes labelled with their symbol, set nodes as notes.
std::string to_dot(const VsaStore& store, NodeLabel root);

/// Graphviz rendering of an automaton: states as ellipses (final ones with
/// a double border), factored transitions as boxes with numbered inbound
/// edges from child states and one outbound edge per target.
std::string to_dot(const TreeAutomaton& a);

}  // namespace vsta
