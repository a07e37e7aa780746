#include "vsta/automaton.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "vsta/error.hpp"

namespace vsta {

std::size_t TreeAutomaton::key_hash(std::string_view head, std::span<const StateId> children) {
  std::size_t h = std::hash<std::string_view>{}(head);
  for (StateId c : children) h ^= c.value + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void TreeAutomaton::check_state(StateId q) const {
  if (q.value >= names_.size()) {
    throw std::out_of_range("state " + std::to_string(q.value) + " does not exist");
  }
}

StateId TreeAutomaton::add_state(std::string name) {
  const StateId id{static_cast<std::uint32_t>(names_.size())};
  if (name.empty()) name = "q" + std::to_string(id.value);
  if (!is_identifier(name)) throw std::invalid_argument("invalid state name '" + name + "'");
  const std::size_t hash = std::hash<std::string_view>{}(name);
  if (name_index_.find(hash, [&](std::uint32_t q) { return names_[q] == name; })) {
    throw std::invalid_argument("duplicate state name '" + name + "'");
  }
  names_.push_back(std::move(name));
  name_index_.insert(hash, id.value);
  is_final_.push_back(false);
  return id;
}

std::optional<StateId> TreeAutomaton::find_state(std::string_view name) const {
  const auto id = name_index_.find(std::hash<std::string_view>{}(name),
                                   [&](std::uint32_t q) { return names_[q] == name; });
  if (!id) return std::nullopt;
  return StateId{*id};
}

void TreeAutomaton::add_final(StateId q) {
  check_state(q);
  if (is_final_[q.value]) return;
  is_final_[q.value] = true;
  final_.insert(std::lower_bound(final_.begin(), final_.end(), q), q);
}

std::size_t TreeAutomaton::add_transitions(const Symbol& head,
                                           std::span<const StateId> children,
                                           std::span<const StateId> targets) {
  if (children.size() != head.arity) {
    throw ArityError("transition over '" + head.name + "' needs " +
                     std::to_string(head.arity) + " children, given " +
                     std::to_string(children.size()));
  }
  for (StateId c : children) check_state(c);
  for (StateId t : targets) check_state(t);
  signature_.add(head);

  const std::size_t hash = key_hash(head.name, children);
  const auto found = key_index_.find(hash, [&](std::uint32_t i) {
    const FactoredTransition& t = transitions_[i];
    return t.head.name == head.name &&
           std::equal(t.children.begin(), t.children.end(), children.begin(), children.end());
  });
  const std::size_t index = found ? *found : transitions_.size();
  if (!found) {
    FactoredTransition t;
    t.id = static_cast<std::uint32_t>(index);
    t.head = head;
    t.children.assign(children.begin(), children.end());
    transitions_.push_back(std::move(t));
    key_index_.insert(hash, static_cast<std::uint32_t>(index));
  }
  auto& tgt = transitions_[index].targets;
  const bool was_sorted_tail = tgt.empty() || targets.empty() || tgt.back() < targets.front();
  tgt.insert(tgt.end(), targets.begin(), targets.end());
  if (!was_sorted_tail || !std::is_sorted(tgt.begin(), tgt.end())) {
    std::sort(tgt.begin(), tgt.end());
  }
  tgt.erase(std::unique(tgt.begin(), tgt.end()), tgt.end());
  return index;
}

void TreeAutomaton::add_target(std::size_t index, StateId target) {
  check_state(target);
  auto& tgt = transitions_.at(index).targets;
  auto pos = std::lower_bound(tgt.begin(), tgt.end(), target);
  if (pos == tgt.end() || *pos != target) tgt.insert(pos, target);
}

std::vector<Transition> TreeAutomaton::expanded_transitions() const {
  std::vector<Transition> out;
  for (const auto& t : transitions_) {
    for (StateId target : t.targets) out.push_back(Transition{t.head, t.children, target});
  }
  return out;
}

namespace {

// Inbound factored transitions per state.
std::vector<std::vector<std::size_t>> inbound(const TreeAutomaton& a) {
  std::vector<std::vector<std::size_t>> in(a.num_states());
  const auto& ts = a.transitions();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (StateId q : ts[i].targets) in[q.value].push_back(i);
  }
  return in;
}

std::vector<StateId> require_topological_order(const TreeAutomaton& a) {
  AcyclicityResult r = is_acyclic(a);
  if (!r.acyclic) {
    std::string msg = "automaton has a cycle through";
    for (StateId q : r.cycle) msg += " " + a.state_name(q);
    throw CyclicAutomatonError(msg);
  }
  return std::move(r.order);
}

class Language {
 public:
  Language(const TreeAutomaton& a, std::size_t limit)
      : a_(a),
        limit_(limit),
        order_(require_topological_order(a)),
        in_(inbound(a)),
        nonempty_(a.num_states(), false),
        state_terms_(a.num_states()),
        transition_terms_(a.transitions().size()) {
    for (StateId q : order_) {
      for (std::size_t t : in_[q.value]) {
        if (useful(t)) {
          nonempty_[q.value] = true;
          break;
        }
      }
    }
  }

  std::vector<Term> of(std::span<const StateId> roots) {
    // Restrict to states that can contribute to a root; each such state
    // denotes no more terms than the roots together, so a per-state limit
    // check reports overflow exactly.
    std::vector<bool> needed(a_.num_states(), false);
    std::vector<StateId> stack;
    for (StateId r : roots) {
      if (nonempty_[r.value] && !needed[r.value]) {
        needed[r.value] = true;
        stack.push_back(r);
      }
    }
    while (!stack.empty()) {
      StateId q = stack.back();
      stack.pop_back();
      for (std::size_t t : in_[q.value]) {
        if (!useful(t)) continue;
        for (StateId c : a_.transitions()[t].children) {
          if (!needed[c.value]) {
            needed[c.value] = true;
            stack.push_back(c);
          }
        }
      }
    }
    for (StateId q : order_) {
      if (needed[q.value] && !state_terms_[q.value]) compute_state(q);
    }
    std::vector<Term> out;
    for (StateId r : roots) {
      if (!nonempty_[r.value]) continue;
      const auto& part = *state_terms_[r.value];
      out.insert(out.end(), part.begin(), part.end());
      if (out.size() > limit_) sort_unique(out);
      if (out.size() > limit_) throw OverflowError(limit_);
    }
    sort_unique(out);
    return out;
  }

 private:
  bool useful(std::size_t t) const {
    const auto& ch = a_.transitions()[t].children;
    return std::all_of(ch.begin(), ch.end(), [&](StateId c) { return nonempty_[c.value]; });
  }

  void compute_state(StateId q) {
    std::vector<Term> out;
    for (std::size_t t : in_[q.value]) {
      if (!useful(t)) continue;
      const auto& part = transition_language(t);
      out.insert(out.end(), part.begin(), part.end());
      if (out.size() > limit_) sort_unique(out);
      if (out.size() > limit_) throw OverflowError(limit_);
    }
    sort_unique(out);
    state_terms_[q.value] = std::move(out);
  }

  // Language of head(children), computed once per factored transition.
  const std::vector<Term>& transition_language(std::size_t t) {
    auto& slot = transition_terms_[t];
    if (slot) return *slot;
    const auto& tr = a_.transitions()[t];
    std::vector<const std::vector<Term>*> parts;
    std::size_t total = 1;
    for (StateId c : tr.children) {
      const auto& p = *state_terms_[c.value];
      parts.push_back(&p);
      total *= p.size();
      if (total > limit_) throw OverflowError(limit_);
    }
    std::vector<Term> out;
    out.reserve(total);
    std::vector<std::size_t> idx(parts.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
      std::vector<Term> args;
      args.reserve(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) args.push_back((*parts[i])[idx[i]]);
      out.emplace_back(tr.head, std::move(args));
      for (std::size_t i = parts.size(); i-- > 0;) {
        if (++idx[i] < parts[i]->size()) break;
        idx[i] = 0;
      }
    }
    slot = std::move(out);
    return *slot;
  }

  const TreeAutomaton& a_;
  std::size_t limit_;
  std::vector<StateId> order_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<bool> nonempty_;
  std::vector<std::optional<std::vector<Term>>> state_terms_;
  std::vector<std::optional<std::vector<Term>>> transition_terms_;
};

std::uint64_t pair_key(StateId p, StateId q) {
  return (static_cast<std::uint64_t>(p.value) << 32) | q.value;
}

}  // namespace

AcyclicityResult is_acyclic(const TreeAutomaton& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<std::uint32_t>> succ(n);
  std::vector<std::vector<std::uint32_t>> pred(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& t : a.transitions()) {
    for (StateId c : t.children) {
      for (StateId target : t.targets) {
        succ[c.value].push_back(target.value);
        pred[target.value].push_back(c.value);
        ++indegree[target.value];
      }
    }
  }

  AcyclicityResult r;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t q = 0; q < n; ++q) {
    if (indegree[q] == 0) ready.push(q);
  }
  while (!ready.empty()) {
    const std::uint32_t q = ready.top();
    ready.pop();
    r.order.push_back(StateId{q});
    for (std::uint32_t s : succ[q]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (r.order.size() == n) {
    r.acyclic = true;
    return r;
  }

  // Every state left over has a predecessor that is also left over, so
  // walking predecessors must revisit a state.
  std::uint32_t start = 0;
  while (indegree[start] == 0) ++start;
  std::vector<std::int64_t> pos(n, -1);
  std::vector<std::uint32_t> walk;
  std::uint32_t cur = start;
  while (pos[cur] < 0) {
    pos[cur] = static_cast<std::int64_t>(walk.size());
    walk.push_back(cur);
    for (std::uint32_t p : pred[cur]) {
      if (indegree[p] > 0) {
        cur = p;
        break;
      }
    }
  }
  for (auto i = static_cast<std::size_t>(pos[cur]); i < walk.size(); ++i) {
    r.cycle.push_back(StateId{walk[i]});
  }
  std::reverse(r.cycle.begin(), r.cycle.end());
  r.order.clear();
  return r;
}

std::vector<Term> enumerate_ta(const TreeAutomaton& a, std::size_t limit) {
  Language lang(a, limit);
  return lang.of(a.final_states());
}

std::vector<Term> enumerate_state(const TreeAutomaton& a, StateId q, std::size_t limit) {
  if (q.value >= a.num_states()) throw std::out_of_range("no such state");
  Language lang(a, limit);
  return lang.of(std::span<const StateId>(&q, 1));
}

MembershipRun run_membership(const TreeAutomaton& a, const Term& t) {
  std::unordered_map<std::string, std::vector<std::size_t>> by_head;
  for (std::size_t i = 0; i < a.transitions().size(); ++i) {
    by_head[a.transitions()[i].head.name].push_back(i);
  }

  MembershipRun run;
  std::function<std::vector<StateId>(const Term&)> visit =
      [&](const Term& s) -> std::vector<StateId> {
    if (!a.signature().contains(s.head())) {
      throw UnknownSymbolError("symbol '" + s.head().name + "/" +
                               std::to_string(s.head().arity) +
                               "' is not in the automaton's signature");
    }
    std::vector<std::vector<StateId>> kids;
    kids.reserve(s.children().size());
    for (const Term& c : s.children()) kids.push_back(visit(c));

    std::vector<StateId> reached;
    if (auto it = by_head.find(s.head().name); it != by_head.end()) {
      for (std::size_t i : it->second) {
        const auto& tr = a.transitions()[i];
        bool fires = true;
        for (std::size_t k = 0; k < kids.size() && fires; ++k) {
          fires = std::binary_search(kids[k].begin(), kids[k].end(), tr.children[k]);
        }
        if (fires) reached.insert(reached.end(), tr.targets.begin(), tr.targets.end());
      }
    }
    std::sort(reached.begin(), reached.end());
    reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
    run.reached.push_back(SubtermRun{s, reached});
    return reached;
  };

  const auto root = visit(t);
  run.accepted = std::any_of(root.begin(), root.end(),
                             [&](StateId q) { return a.is_final(q); });
  return run;
}

PathCount count_paths(const TreeAutomaton& a) {
  const auto order = require_topological_order(a);
  const auto in = inbound(a);
  PathCount pc;
  pc.per_state.assign(a.num_states(), BigCount(0));
  std::vector<std::optional<BigCount>> per_transition(a.transitions().size());
  for (StateId q : order) {
    BigCount sum = 0;
    for (std::size_t t : in[q.value]) {
      auto& slot = per_transition[t];
      if (!slot) {
        BigCount prod = 1;
        for (StateId c : a.transitions()[t].children) prod *= pc.per_state[c.value];
        slot = std::move(prod);
      }
      sum += *slot;
    }
    pc.per_state[q.value] = std::move(sum);
  }
  for (StateId f : a.final_states()) pc.total += pc.per_state[f.value];
  return pc;
}

bool is_unambiguous(const TreeAutomaton& a) {
  // For state pairs (p, q): bit 0 = some term is in both languages, bit 1 =
  // some term has a derivation at p and a different derivation at q.
  constexpr std::uint8_t kShared = 1;
  constexpr std::uint8_t kDistinct = 2;
  std::unordered_map<std::uint64_t, std::uint8_t> rel;
  auto flags = [&](StateId p, StateId q) -> std::uint8_t {
    auto it = rel.find(pair_key(p, q));
    return it == rel.end() ? 0 : it->second;
  };

  std::unordered_map<std::string, std::vector<std::size_t>> by_head;
  for (std::size_t i = 0; i < a.transitions().size(); ++i) {
    by_head[a.transitions()[i].head.name].push_back(i);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [head, group] : by_head) {
      for (std::size_t i : group) {
        for (std::size_t j : group) {
          const auto& ti = a.transitions()[i];
          const auto& tj = a.transitions()[j];
          bool shared = true;
          bool distinct_below = false;
          for (std::size_t k = 0; k < ti.children.size() && shared; ++k) {
            const std::uint8_t f = flags(ti.children[k], tj.children[k]);
            shared = (f & kShared) != 0;
            distinct_below = distinct_below || (f & kDistinct) != 0;
          }
          if (!shared) continue;
          for (StateId p : ti.targets) {
            for (StateId q : tj.targets) {
              std::uint8_t want = kShared;
              if (i != j || p != q || distinct_below) want |= kDistinct;
              auto& slot = rel[pair_key(p, q)];
              if ((slot | want) != slot) {
                slot |= want;
                changed = true;
              }
            }
          }
        }
      }
    }
  }

  for (StateId p : a.final_states()) {
    for (StateId q : a.final_states()) {
      if (flags(p, q) & kDistinct) return false;
    }
  }
  return true;
}

TaSizeReport ta_size(const TreeAutomaton& a) {
  TaSizeReport r;
  r.states = a.num_states();
  r.final_states = a.final_states().size();
  r.factored_transitions = a.transitions().size();
  for (const auto& t : a.transitions()) {
    r.expanded_transitions += t.targets.size();
    r.arity_sum += t.children.size();
  }
  return r;
}

}  // namespace vsta
