#include <unordered_map>

#include "vsta/automaton.hpp"

namespace vsta {

TreeAutomaton intersect(const TreeAutomaton& a, const TreeAutomaton& b) {
  TreeAutomaton out(Signature::merge(a.signature(), b.signature()));

  std::unordered_map<std::uint64_t, StateId> product;
  auto key = [](StateId p, StateId q) {
    return (static_cast<std::uint64_t>(p.value) << 32) | q.value;
  };
  auto state_of = [&](StateId p, StateId q) -> StateId {
    auto [it, inserted] = product.try_emplace(key(p, q));
    if (inserted) {
      it->second = out.add_state("x" + std::to_string(p.value) + "_" + std::to_string(q.value));
      if (a.is_final(p) && b.is_final(q)) out.add_final(it->second);
    }
    return it->second;
  };

  std::unordered_map<std::string, std::vector<std::size_t>> b_by_head;
  for (std::size_t j = 0; j < b.transitions().size(); ++j) {
    b_by_head[b.transitions()[j].head.name].push_back(j);
  }
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < a.transitions().size(); ++i) {
    const auto& ti = a.transitions()[i];
    auto it = b_by_head.find(ti.head.name);
    if (it == b_by_head.end()) continue;
    for (std::size_t j : it->second) {
      if (b.transitions()[j].head.arity == ti.head.arity) candidates.emplace_back(i, j);
    }
  }

  // Fire transition pairs once all their child pairs have been discovered,
  // starting from the nullary ones; repeat until nothing new fires.
  std::vector<bool> fired(candidates.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (fired[c]) continue;
      const auto& ta = a.transitions()[candidates[c].first];
      const auto& tb = b.transitions()[candidates[c].second];
      std::vector<StateId> kids;
      kids.reserve(ta.children.size());
      bool ready = true;
      for (std::size_t k = 0; k < ta.children.size() && ready; ++k) {
        auto it = product.find(key(ta.children[k], tb.children[k]));
        ready = it != product.end();
        if (ready) kids.push_back(it->second);
      }
      if (!ready) continue;
      std::vector<StateId> targets;
      targets.reserve(ta.targets.size() * tb.targets.size());
      for (StateId p : ta.targets) {
        for (StateId q : tb.targets) targets.push_back(state_of(p, q));
      }
      out.add_transitions(ta.head, kids, targets);
      fired[c] = true;
      progress = true;
    }
  }
  return out;
}

}  // namespace vsta
