#include "vsta/testgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsta::testgen {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // High word of the 128-bit product next() * n, from 32-bit halves.
  const std::uint64_t x = next();
  const std::uint64_t x_lo = x & 0xffffffffULL, x_hi = x >> 32;
  const std::uint64_t n_lo = n & 0xffffffffULL, n_hi = n >> 32;
  const std::uint64_t lo_lo = x_lo * n_lo;
  const std::uint64_t hi_lo = x_hi * n_lo;
  const std::uint64_t lo_hi = x_lo * n_hi;
  const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & 0xffffffffULL) + lo_hi;
  return x_hi * n_hi + (hi_lo >> 32) + (cross >> 32);
}

bool SplitMix64::chance(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

Signature default_signature() {
  return Signature{{"a", 0}, {"b", 0}, {"c", 0}, {"g", 1}, {"f", 2}};
}

namespace {

// Largest r >= 1 with r^k <= budget.
std::size_t int_root(std::size_t budget, std::uint32_t k) {
  if (k <= 1) return std::max<std::size_t>(budget, 1);
  std::size_t r = 1;
  for (;;) {
    const std::size_t next = r + 1;
    std::size_t p = 1;
    bool over = false;
    for (std::uint32_t i = 0; i < k && !over; ++i) {
      over = p > budget / next;
      p *= next;
    }
    if (over || p > budget) return r;
    r = next;
  }
}

class Generator {
 public:
  Generator(VsaStore& store, const GenConfig& cfg) : store_(store), cfg_(cfg), rng_(cfg.seed) {
    const auto syms = cfg.signature.symbols();
    if (cfg.max_depth == 0) throw std::invalid_argument("max_depth must be positive");
    if (cfg.max_union_width == 0) throw std::invalid_argument("max_union_width must be positive");
    if (cfg.max_terms == 0) throw std::invalid_argument("max_terms must be positive");
    if (!(cfg.share_probability >= 0.0 && cfg.share_probability <= 1.0)) {
      throw std::invalid_argument("share_probability must lie in [0, 1]");
    }
    if (syms.size() > 64) throw std::invalid_argument("at most 64 symbols are supported");
    for (std::size_t i = 0; i < syms.size(); ++i) {
      (syms[i].arity == 0 ? constants_ : functions_).push_back(i);
    }
    if (constants_.empty()) throw std::invalid_argument("signature needs a constant");
  }

  NodeLabel run() {
    if (cfg_.mode != GenMode::Ambiguous) return make(cfg_.max_depth, cfg_.max_terms, 0).label;
    return make_ambiguous();
  }

 private:
  struct Made {
    NodeLabel label;
    std::uint32_t height;   // max height of denoted terms
    std::size_t bound;      // derivation count, >= |denotation|
    std::uint64_t heads;    // bitmask of root symbols
  };

  const Symbol& sym(std::size_t i) const { return cfg_.signature.symbols()[i]; }

  Term random_term(std::uint32_t depth) {
    if (depth <= 1 || functions_.empty() || rng_.chance(0.4)) {
      return Term(sym(constants_[rng_.below(constants_.size())]));
    }
    const Symbol& f = sym(functions_[rng_.below(functions_.size())]);
    std::vector<Term> kids;
    for (std::uint32_t i = 0; i < f.arity; ++i) kids.push_back(random_term(depth - 1));
    return Term(f, std::move(kids));
  }

  std::uint64_t head_bit(const Symbol& s) const {
    const auto syms = cfg_.signature.symbols();
    for (std::size_t i = 0; i < syms.size(); ++i) {
      if (syms[i] == s) return std::uint64_t{1} << i;
    }
    return 0;
  }

  Made remember(Made m) {
    pool_.push_back(m);
    return m;
  }

  Made make(std::uint32_t depth, std::size_t budget, std::uint32_t nesting) {
    if (!pool_.empty() && rng_.chance(cfg_.share_probability)) {
      std::vector<std::size_t> fits;
      for (std::size_t i = 0; i < pool_.size(); ++i) {
        if (pool_[i].height <= depth && pool_[i].bound <= budget) fits.push_back(i);
      }
      if (!fits.empty()) return pool_[fits[rng_.below(fits.size())]];
    }

    const std::uint64_t roll = rng_.below(100);
    const bool can_union = nesting < 2 && budget > 1;
    if (depth == 1) {
      if (roll < 40) return make_set(depth, budget);
      if (roll < 60 || !can_union) return make_join(depth, budget, true);
      return make_union(depth, budget, nesting);
    }
    if (roll < 15) return make_set(depth, budget);
    if (roll < 70 && can_union) return make_union(depth, budget, nesting);
    return make_join(depth, budget, false);
  }

  Made make_set(std::uint32_t depth, std::size_t budget) {
    std::vector<Term> terms;
    if (!rng_.chance(0.05)) {
      const std::size_t n = rng_.between(1, std::min<std::size_t>(cfg_.max_union_width, budget));
      for (std::size_t i = 0; i < n; ++i) terms.push_back(random_term(depth));
    }
    sort_unique(terms);
    Made m{store_.mk_set(terms), 0, terms.size(), 0};
    for (const Term& t : terms) {
      m.height = std::max<std::uint32_t>(m.height, static_cast<std::uint32_t>(t.height()));
      m.heads |= head_bit(t.head());
    }
    return remember(m);
  }

  Made make_join(std::uint32_t depth, std::size_t budget, bool constant_only) {
    const auto& pick_from = (constant_only || functions_.empty() || rng_.chance(0.1))
                                ? constants_
                                : functions_;
    const Symbol& f = sym(pick_from[rng_.below(pick_from.size())]);
    const std::size_t child_budget = int_root(budget, f.arity);
    std::vector<NodeLabel> kids;
    std::size_t bound = 1;
    std::uint32_t height = 0;
    for (std::uint32_t i = 0; i < f.arity; ++i) {
      const Made c = make(depth - 1, child_budget, 0);
      kids.push_back(c.label);
      bound *= c.bound;
      height = std::max(height, c.height);
    }
    return remember(Made{store_.mk_join(f, kids), height + 1, bound, head_bit(f)});
  }

  Made make_union(std::uint32_t depth, std::size_t budget, std::uint32_t nesting) {
    const std::size_t max_width = std::min<std::size_t>(cfg_.max_union_width, budget);
    const std::size_t width = rng_.between(std::min<std::size_t>(2, max_width), max_width);
    const std::size_t child_budget = std::max<std::size_t>(1, budget / width);
    std::vector<NodeLabel> kids;
    Made m{{}, 0, 0, 0};
    for (std::size_t i = 0; i < width; ++i) {
      Made c = make(depth, child_budget, nesting + 1);
      if (cfg_.mode == GenMode::Disjoint && (c.heads & m.heads) != 0) continue;
      if (std::find(kids.begin(), kids.end(), c.label) != kids.end()) continue;
      kids.push_back(c.label);
      m.bound += c.bound;
      m.height = std::max(m.height, c.height);
      m.heads |= c.heads;
    }
    m.label = store_.mk_union(kids);
    return remember(m);
  }

  NodeLabel make_ambiguous() {
    if (cfg_.max_depth < 2 || functions_.empty()) {
      throw std::invalid_argument("ambiguous mode needs depth >= 2 and a non-constant symbol");
    }
    const Symbol& h = sym(functions_[rng_.below(functions_.size())]);
    const std::uint32_t inner = cfg_.max_depth - 1;

    std::vector<Term> base;
    const std::size_t n = rng_.between(1, cfg_.max_union_width);
    for (std::size_t i = 0; i < n; ++i) base.push_back(random_term(inner));
    sort_unique(base);
    // Two extra terms outside the shared base, so the two unions differ.
    std::vector<Term> extra;
    for (int tries = 0; extra.size() < 2 && tries < 1000; ++tries) {
      Term t = random_term(inner);
      if (!std::binary_search(base.begin(), base.end(), t) &&
          std::find(extra.begin(), extra.end(), t) == extra.end()) {
        extra.push_back(std::move(t));
      }
    }
    if (extra.size() < 2) throw std::invalid_argument("signature too small for ambiguous mode");

    const NodeLabel shared = store_.mk_set(base);
    const NodeLabel u1 = store_.mk_union({shared, store_.mk_set({extra[0]})});
    const NodeLabel u2 = store_.mk_union({shared, store_.mk_set({extra[1]})});
    const NodeLabel j1 = store_.mk_join(h, std::vector<NodeLabel>(h.arity, u1));
    const NodeLabel j2 = store_.mk_join(h, std::vector<NodeLabel>(h.arity, u2));

    std::size_t side = 1;
    for (std::uint32_t i = 0; i < h.arity; ++i) side *= base.size() + 1;
    const std::size_t rest = cfg_.max_terms > 2 * side ? cfg_.max_terms - 2 * side : 1;
    const Made body = make(cfg_.max_depth, rest, 1);
    return store_.mk_union({body.label, j1, j2});
  }

  VsaStore& store_;
  const GenConfig& cfg_;
  SplitMix64 rng_;
  std::vector<std::size_t> constants_;
  std::vector<std::size_t> functions_;
  std::vector<Made> pool_;
};

}  // namespace

NodeLabel gen_vsa(VsaStore& store, const GenConfig& cfg) { return Generator(store, cfg).run(); }

NormalizedVsa gen_layered_vsa(VsaStore& store, std::uint64_t seed, std::size_t target_size) {
  SplitMix64 rng(seed);
  const Signature sig = default_signature();
  const Symbol& g = sig.at("g");
  const Symbol& f = sig.at("f");

  std::vector<NodeLabel> unions;
  std::vector<bool> used;
  std::size_t size = 0;  // nodes + edges created so far
  {
    std::vector<NodeLabel> leaves;
    for (const char* c : {"a", "b", "c"}) {
      leaves.push_back(store.mk_join(sig.at(c), std::span<const NodeLabel>{}));
    }
    unions.push_back(store.mk_union(leaves));
    used.push_back(false);
    size += 1 + 3 + 3;
  }
  // Children are drawn from a window of recent unions so the DAG gets deep
  // as well as wide.
  auto pick = [&]() -> std::size_t {
    const std::size_t window = std::min<std::size_t>(unions.size(), 64);
    const std::size_t i = unions.size() - 1 - rng.below(window);
    used[i] = true;
    return i;
  };

  std::uint64_t serial = 0;
  while (size + 8 < target_size) {
    const std::size_t width = rng.between(1, 3);
    std::vector<NodeLabel> joins;
    for (std::size_t k = 0; k < width; ++k) {
      // Alternate heads and vary children so joins rarely collide.
      ++serial;
      if (serial % 2 == 0) {
        joins.push_back(store.mk_join(g, {unions[pick()]}));
        size += 2;
      } else {
        const NodeLabel l = unions[pick()];
        const NodeLabel r = unions[pick()];
        joins.push_back(store.mk_join(f, {l, r}));
        size += 3;
      }
    }
    const std::size_t before = store.size();
    const NodeLabel u = store.mk_union(joins);
    if (store.size() != before) {
      unions.push_back(u);
      used.push_back(false);
      size += 1 + joins.size();
    }
  }
  std::vector<NodeLabel> top;
  for (std::size_t i = 0; i < unions.size(); ++i) {
    if (!used[i]) top.push_back(store.mk_join(g, {unions[i]}));
  }
  return as_normalized(store, store.mk_union(top));
}

TreeAutomaton gen_automaton(const AutomatonGenConfig& cfg) {
  if (cfg.states == 0) throw std::invalid_argument("need at least one state");
  SplitMix64 rng(cfg.seed);
  TreeAutomaton a(cfg.signature);
  for (std::uint32_t i = 0; i < cfg.states; ++i) a.add_state();
  const auto syms = cfg.signature.symbols();
  if (syms.empty()) throw std::invalid_argument("empty signature");
  for (std::uint32_t i = 0; i < cfg.transitions; ++i) {
    const Symbol& s = syms[rng.below(syms.size())];
    std::vector<StateId> kids;
    std::uint32_t floor = 0;
    for (std::uint32_t k = 0; k < s.arity; ++k) {
      const StateId c{static_cast<std::uint32_t>(rng.below(cfg.states))};
      kids.push_back(c);
      floor = std::max(floor, c.value + 1);
    }
    StateId target{static_cast<std::uint32_t>(rng.below(cfg.states))};
    if (!cfg.allow_cycles) {
      if (floor >= cfg.states) continue;
      target.value = static_cast<std::uint32_t>(rng.between(floor, cfg.states - 1));
    }
    a.add_transition(s, kids, target);
  }
  const std::size_t finals = rng.between(1, std::min<std::uint32_t>(cfg.states, 2));
  for (std::size_t i = 0; i < finals; ++i) {
    a.add_final(StateId{static_cast<std::uint32_t>(rng.below(cfg.states))});
  }
  return a;
}

}  // namespace vsta::testgen
