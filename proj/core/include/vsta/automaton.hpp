#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vsta/detail/id_table.hpp"
#include "vsta/term.hpp"

namespace vsta {

struct StateId {
  std::uint32_t value = 0;

  auto operator<=>(const StateId&) const = default;
};

/// One expanded transition head(children) -> target.
struct Transition {
  Symbol head;
  std::vector<StateId> children;
  StateId target;

  auto operator<=>(const Transition&) const = default;
};

/// All transitions sharing one left-hand side head(children), stored once
/// with the set of states they lead to.
struct FactoredTransition {
  std::uint32_t id = 0;
  Symbol head;
  std::vector<StateId> children;
  std::vector<StateId> targets;  // sorted, no duplicates, never empty
};

/// Bottom-up nondeterministic finite tree automaton.
///
/// States are dense ids with unique identifier names. Transitions are kept
/// in factored form: the (head, children) key is unique across the
/// transition list, and its targets hold every state it reaches.
class TreeAutomaton {
 public:
  TreeAutomaton() = default;
  explicit TreeAutomaton(Signature sig) : signature_(std::move(sig)) {}

  /// Adds a state. An empty name becomes "q<id>". Throws
  /// std::invalid_argument on a duplicate or non-identifier name.
  StateId add_state(std::string name = {});
  std::optional<StateId> find_state(std::string_view name) const;
  const std::string& state_name(StateId q) const { return names_.at(q.value); }
  std::size_t num_states() const { return names_.size(); }

  void add_final(StateId q);
  bool is_final(StateId q) const { return is_final_.at(q.value); }
  /// Final states, ascending.
  const std::vector<StateId>& final_states() const { return final_; }

  /// Adds head(children) -> t for every t in targets, merging into the
  /// factored transition with the same key. Returns that transition's index.
  /// The head is added to the signature (SignatureMismatchError on an arity
  /// conflict; ArityError if children.size() != head.arity).
  std::size_t add_transitions(const Symbol& head, std::span<const StateId> children,
                              std::span<const StateId> targets);
  std::size_t add_transition(const Symbol& head, std::span<const StateId> children,
                             StateId target) {
    return add_transitions(head, children, std::span<const StateId>(&target, 1));
  }
  std::size_t add_transition(const Symbol& head, std::initializer_list<StateId> children,
                             StateId target) {
    return add_transition(head, std::span<const StateId>(children.begin(), children.size()),
                          target);
  }

  /// Adds one more target to the factored transition at `index`.
  void add_target(std::size_t index, StateId target);

  const std::vector<FactoredTransition>& transitions() const { return transitions_; }
  /// The factored transitions expanded, in factored order then target order.
  std::vector<Transition> expanded_transitions() const;

  const Signature& signature() const { return signature_; }
  /// Extends the signature without adding transitions.
  void add_symbol(const Symbol& sym) { signature_.add(sym); }

 private:
  static std::size_t key_hash(std::string_view head, std::span<const StateId> children);

  void check_state(StateId q) const;

  Signature signature_;
  std::vector<std::string> names_;
  detail::IdTable name_index_;  // state ids, keyed by names_
  std::vector<bool> is_final_;
  std::vector<StateId> final_;
  std::vector<FactoredTransition> transitions_;
  detail::IdTable key_index_;  // transition indices, keyed by (head, children)
};

struct AcyclicityResult {
  bool acyclic = false;
  /// Topological order (every child state before the states it feeds);
  /// filled when acyclic. Ties are broken by ascending id.
  std::vector<StateId> order;
  /// A cycle q0 -> q1 -> ... -> q0 in the state dependency graph, without
  /// repeating q0 at the end; filled when cyclic.
  std::vector<StateId> cycle;
};

/// Dependency graph: an edge from each child state of a transition to each
/// of its targets.
AcyclicityResult is_acyclic(const TreeAutomaton& a);

/// Sorted language of the automaton. Throws CyclicAutomatonError or
/// OverflowError (more than `limit` distinct terms).
std::vector<Term> enumerate_ta(const TreeAutomaton& a, std::size_t limit);

/// Sorted language of a single state.
std::vector<Term> enumerate_state(const TreeAutomaton& a, StateId q, std::size_t limit);

struct SubtermRun {
  Term subterm;
  std::vector<StateId> states;  // ascending
};

struct MembershipRun {
  bool accepted = false;
  /// Reached states per subterm occurrence, in post-order; the last entry
  /// is the whole term.
  std::vector<SubtermRun> reached;
};

/// Nondeterministic bottom-up subset run. Works on cyclic automata too.
/// Throws UnknownSymbolError when the term uses a symbol (or arity) outside
/// the automaton's signature.
MembershipRun run_membership(const TreeAutomaton& a, const Term& t);

using BigCount = boost::multiprecision::cpp_int;

struct PathCount {
  std::vector<BigCount> per_state;
  BigCount total;  // sum over final states
};

/// Number of derivations per state: count(q) is the sum over transitions
/// into q of the product of their children's counts. The total equals the
/// language size iff no accepted term has two accepting runs, and bounds it
/// from above otherwise. Throws CyclicAutomatonError.
PathCount count_paths(const TreeAutomaton& a);

/// True iff every accepted term has exactly one accepting run, i.e.
/// count_paths(a).total equals the language size.
bool is_unambiguous(const TreeAutomaton& a);

/// Reachable product automaton accepting the intersection of both
/// languages. Product states are named "x<a>_<b>" after the factor ids.
/// Throws SignatureMismatchError when a shared symbol has two arities.
TreeAutomaton intersect(const TreeAutomaton& a, const TreeAutomaton& b);

struct TaSizeReport {
  std::size_t states = 0;
  std::size_t final_states = 0;
  std::size_t factored_transitions = 0;
  std::size_t expanded_transitions = 0;
  /// Sum of arities over factored transitions.
  std::size_t arity_sum = 0;
};

TaSizeReport ta_size(const TreeAutomaton& a);

}  // namespace vsta
