#pragma once

// Shared fixtures for the unit tests.

#include <fstream>
#include <sstream>
#include <string>

#include "vsta/testgen.hpp"
#include "vsta/vsta.hpp"

namespace vsta::test {

inline const Signature& fig1_signature() {
  static const Signature sig{{"a", 0}, {"b", 0}, {"c", 0}, {"g", 1}, {"f", 2}};
  return sig;
}

inline Symbol sym(const char* name) { return fig1_signature().at(name); }

inline Term term(const char* text) { return parse_term(text, fig1_signature()); }

/// f(g(X), g(Y)) for X, Y in {a, b, c}, built as an orthodox VSA whose two
/// f arguments intern to one shared g join.
inline NodeLabel build_fig1(VsaStore& store) {
  const NodeLabel abc = store.mk_union({store.mk_join(sym("a"), {}),
                                        store.mk_join(sym("b"), {}),
                                        store.mk_join(sym("c"), {})});
  const NodeLabel g1 = store.mk_join(sym("g"), {abc});
  const NodeLabel g2 = store.mk_join(sym("g"), {abc});
  return store.mk_join(sym("f"), {g1, g2});
}

/// The nine terms, sorted by term_ord.
inline std::vector<Term> fig1_terms() {
  std::vector<Term> out;
  for (const char* x : {"a", "b", "c"}) {
    for (const char* y : {"a", "b", "c"}) {
      out.push_back(term(("(f (g " + std::string(x) + ") (g " + y + "))").c_str()));
    }
  }
  return out;
}

/// Transitions a,b,c -> q1, g(q1) -> q2, f(q2,q2) -> q3, final q3.
inline TreeAutomaton build_fig1_ta() {
  TreeAutomaton a(fig1_signature());
  const StateId q1 = a.add_state("q1");
  const StateId q2 = a.add_state("q2");
  const StateId q3 = a.add_state("q3");
  a.add_transition(sym("a"), {}, q1);
  a.add_transition(sym("b"), {}, q1);
  a.add_transition(sym("c"), {}, q1);
  a.add_transition(sym("g"), {q1}, q2);
  a.add_transition(sym("f"), {q2, q2}, q3);
  a.add_final(q3);
  return a;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(VSTA_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Random term over `sig` of height at most `depth`.
inline Term random_term(testgen::SplitMix64& rng, const Signature& sig, std::size_t depth) {
  const auto syms = sig.symbols();
  std::vector<Symbol> pool;
  for (const Symbol& s : syms) {
    if (depth > 1 || s.arity == 0) pool.push_back(s);
  }
  const Symbol& s = pool[rng.below(pool.size())];
  std::vector<Term> kids;
  for (std::uint32_t i = 0; i < s.arity; ++i) kids.push_back(random_term(rng, sig, depth - 1));
  return Term(s, std::move(kids));
}

}  // namespace vsta::test
