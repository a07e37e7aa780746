#include <doctest.h>

#include "support.hpp"

using namespace vsta;
using vsta::test::build_fig1;
using vsta::test::sym;
using vsta::test::term;

TEST_CASE("embedding fig1") {
  VsaStore store;
  const NormalizedVsa v = normalize(store, build_fig1(store));
  const EmbeddingResult r = embed(store, v);
  const TreeAutomaton& a = r.automaton;

  CHECK(a.num_states() == 3);
  CHECK(a.transitions().size() == 5);
  CHECK(a.final_states() == std::vector<StateId>{r.root_state});
  CHECK(r.state_of_union(v.root()) == r.root_state);
  CHECK(enumerate_ta(a, 100) == vsta::test::fig1_terms());
  CHECK(is_acyclic(a).acyclic);
  CHECK(count_paths(a).total == 9);

  // States follow union labels.
  for (std::size_t q = 0; q < r.union_of_state.size(); ++q) {
    CHECK(a.state_name(StateId{static_cast<std::uint32_t>(q)}) ==
          "q" + std::to_string(r.union_of_state[q].value));
  }

  const LinearityReport lin = check_linearity(store, v, r);
  REQUIRE(lin.checks.size() == 4);
  CHECK(lin.holds());
  CHECK(lin.checks[0].automaton_side == 3);
  CHECK(lin.checks[1].automaton_side == 5);
  CHECK(lin.checks[2].automaton_side == 5);
  CHECK(lin.checks[3].automaton_side == 3);
}

TEST_CASE("embedding the smallest VSA") {
  VsaStore store;
  const NormalizedVsa v = normalize(store, store.mk_join(sym("a"), {}));
  const EmbeddingResult r = embed(store, v);
  CHECK(r.automaton.num_states() == 1);
  REQUIRE(r.automaton.transitions().size() == 1);
  CHECK(r.automaton.transitions()[0].head == sym("a"));
  CHECK(r.automaton.transitions()[0].targets == std::vector<StateId>{r.root_state});
  CHECK(enumerate_ta(r.automaton, 10) == std::vector<Term>{term("a")});
  for (const auto& c : check_linearity(store, v, r).checks) CHECK(c.holds());
}

TEST_CASE("a join under two unions becomes one multi-target transition") {
  VsaStore store;
  const NodeLabel u3 = store.mk_union({store.mk_join(sym("a"), {})});
  const NodeLabel jg = store.mk_join(sym("g"), {u3});
  const NodeLabel u1 = store.mk_union({jg});
  const NodeLabel u2 = store.mk_union({jg, store.mk_join(sym("b"), {})});
  const NodeLabel root = store.mk_union({store.mk_join(sym("f"), {u1, u2})});
  const NormalizedVsa v = as_normalized(store, root);
  const EmbeddingResult r = embed(store, v);

  const auto& ts = r.automaton.transitions();
  const auto g = std::find_if(ts.begin(), ts.end(),
                              [](const FactoredTransition& t) { return t.head.name == "g"; });
  REQUIRE(g != ts.end());
  CHECK(g->children == std::vector<StateId>{*r.state_of_union(u3)});
  std::vector<StateId> parents{*r.state_of_union(u1), *r.state_of_union(u2)};
  std::sort(parents.begin(), parents.end());
  CHECK(g->targets == parents);
  CHECK(ta_size(r.automaton).expanded_transitions == vsa_size(store, v).union_edges);
  CHECK(enumerate_ta(r.automaton, 10) == enumerate_vsa(store, v, 10));
}

TEST_CASE("embed rejects VSAs outside the normal form") {
  VsaStore store;
  const NodeLabel ja = store.mk_join(sym("a"), {});
  const NodeLabel bad = store.mk_union({store.mk_union({ja})});
  // Only reachable through normalize/as_normalized in the public API, so
  // check the validating constructor instead.
  CHECK_THROWS_AS(as_normalized(store, bad), InvalidVsaError);
}

TEST_CASE("embedding properties on the generated corpus") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CAPTURE(seed);
    VsaStore store;
    testgen::GenConfig cfg;
    cfg.seed = seed;
    cfg.share_probability = 0.5;
    const NormalizedVsa v = normalize(store, testgen::gen_vsa(store, cfg));
    const EmbeddingResult r = embed(store, v);

    CHECK(is_acyclic(r.automaton).acyclic);
    CHECK(check_linearity(store, v, r).holds());
    CHECK(enumerate_ta(r.automaton, 10000) == enumerate_vsa(store, v, 10000));

    // Per-state claim: each union denotes what its state accepts.
    for (std::size_t q = 0; q < r.union_of_state.size(); ++q) {
      const StateId s{static_cast<std::uint32_t>(q)};
      CHECK(enumerate_state(r.automaton, s, 10000) ==
            enumerate_vsa(store, r.union_of_state[q], 10000));
    }
    // Per-transition claim: a join denotes head(children languages).
    for (std::size_t t = 0; t < r.join_of_transition.size(); ++t) {
      const auto& tr = r.automaton.transitions()[t];
      std::vector<std::vector<Term>> args;
      for (StateId c : tr.children) args.push_back(enumerate_state(r.automaton, c, 10000));
      std::vector<Term> product;
      std::vector<std::size_t> idx(args.size(), 0);
      const bool any_empty =
          std::any_of(args.begin(), args.end(), [](const auto& x) { return x.empty(); });
      while (!any_empty) {
        std::vector<Term> kids;
        for (std::size_t i = 0; i < args.size(); ++i) kids.push_back(args[i][idx[i]]);
        product.emplace_back(tr.head, kids);
        std::size_t i = args.size();
        while (i > 0 && ++idx[i - 1] == args[i - 1].size()) idx[--i] = 0;
        if (i == 0) break;
      }
      sort_unique(product);
      CHECK(product == enumerate_vsa(store, r.join_of_transition[t], 10000));
    }

    // Deterministic: a second embedding is identical.
    const EmbeddingResult again = embed(store, v);
    CHECK(save_ta(again.automaton) == save_ta(r.automaton));
    CHECK(again.union_of_state == r.union_of_state);
    for (std::size_t t = 0; t < r.automaton.transitions().size(); ++t) {
      CHECK(again.automaton.transitions()[t].children == r.automaton.transitions()[t].children);
      CHECK(again.automaton.transitions()[t].targets == r.automaton.transitions()[t].targets);
    }
  }
}

TEST_CASE("layered VSAs embed with matching sizes") {
  for (std::size_t target : {100, 1000, 5000}) {
    VsaStore store;
    const NormalizedVsa v = testgen::gen_layered_vsa(store, target, target);
    const EmbeddingResult r = embed(store, v);
    const VsaSizeReport s = vsa_size(store, v);
    CHECK(s.nodes() + s.edges() >= target / 2);
    CHECK(check_linearity(store, v, r).holds());
    CHECK(is_acyclic(r.automaton).acyclic);
  }
}
