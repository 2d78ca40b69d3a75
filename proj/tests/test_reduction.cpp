#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "subcrit/catalog.hpp"
#include "subcrit/reduction.hpp"
#include "subcrit/sampler.hpp"

using namespace subcrit;

TEST_CASE("pure literal core examples") {
  Formula fl = complementary_pair(3);
  PureLiteralResult r = pure_literal_core(fl);
  CHECK(r.core.formula == fl);
  CHECK(r.trace.steps.empty());

  PureLiteralResult single = pure_literal_core(Formula(3, 3, {Clause{1, 2, 3}}));
  CHECK(single.core.formula.empty());
  REQUIRE(single.trace.steps.size() >= 1);
  CHECK(single.trace.steps.front().removed == std::vector<std::size_t>{0});

  Formula f(5, 3, {Clause{1, 2, 3}, Clause{-1, -2, -3}, Clause{1, 4, 5}});
  PureLiteralResult pr = pure_literal_core(f);
  CHECK(pr.core.variables == std::vector<Var>{1, 2, 3});
  CHECK(canonical_key(pr.core.formula) == canonical_key(fl));
}

TEST_CASE("trace invariants and lifted assignments") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    Formula f = oracle::random_formula(rng, 8, 3, 4 + trial % 12);
    PureLiteralResult r = pure_literal_core(f);
    std::vector<bool> gone(f.size(), false);
    for (const PureLiteralStep& s : r.trace.steps) {
      for (std::size_t ci = 0; ci < f.size(); ++ci)
        if (!gone[ci] && f.clause(ci).contains(-s.literal)) FAIL("step literal not pure");
      for (std::size_t ci : s.removed) {
        REQUIRE(f.clause(ci).contains(s.literal));
        gone[ci] = true;
      }
    }
    for (std::size_t ci : r.core_clauses) REQUIRE_FALSE(gone[ci]);
    REQUIRE(std::count(gone.begin(), gone.end(), true) + r.core_clauses.size() == f.size());
    REQUIRE((r.core_clauses.empty() || is_full(r.core.formula)));
    if (r.core_clauses.empty()) {
      std::vector<bool> a = lift_assignment(f, r, {});
      for (const Clause& c : f.clauses()) {
        bool sat = false;
        for (Literal l : c.literals()) sat |= a[var_of(l) - 1] == (l > 0);
        REQUIRE(sat);
      }
    }
    // Fixpoint.
    if (!r.core_clauses.empty()) REQUIRE(pure_literal_core(r.core.formula).core.formula == r.core.formula);
  }
}

TEST_CASE("pure literal core does not depend on the selection order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Formula f = oracle::random_formula(rng, 9, 3, 10 + trial % 15);
    const PureLiteralResult ref = pure_literal_core(f);
    for (int order = 0; order < 100; ++order) {
      auto pick = [&](std::span<const Literal> pure) {
        return std::uniform_int_distribution<std::size_t>(0, pure.size() - 1)(rng);
      };
      PureLiteralResult alt = pure_literal_core_sequential(f, pick);
      REQUIRE(alt.core_clauses == ref.core_clauses);
    }
  }
}

TEST_CASE("the core contains every full subformula") {
  const FormulaCatalog cat = enumerate_full(3, 2);
  ModelParams p = params_from_alpha(10, 3, 1.6, ModelKind::kFormula);
  for (Seed s = 0; s < 200; ++s) {
    Formula f = sample_formula(p, s);
    PureLiteralResult r = pure_literal_core(f);
    for (const FormulaEntry& e : cat.entries) {
      const std::uint64_t before = count_copies(e.structure, f);
      const std::uint64_t after = r.core_clauses.empty() ? 0 : count_copies(e.structure, r.core.formula);
      REQUIRE(before == after);
    }
  }
}

TEST_CASE("k-core examples") {
  Hypergraph k4 = complete_hypergraph(4, 2);
  KCoreResult r = k_core(k4, 3);
  CHECK(r.core.graph == k4);
  CHECK(r.trace.rounds.empty());

  Hypergraph path(5, 2, {Edge{1, 2}, Edge{2, 3}, Edge{3, 4}, Edge{3, 5}});
  CHECK(k_core(path, 2).core_edges.empty());

  std::vector<Edge> e = k4.edges();
  e.push_back({4, 5});
  KCoreResult pend = k_core(Hypergraph(5, 2, e), 3);
  CHECK(pend.core.vertices == std::vector<Var>{1, 2, 3, 4});
  CHECK(canonical_key(pend.core.graph) == canonical_key(k4));
  REQUIRE(pend.trace.rounds.size() == 1);
  CHECK(pend.trace.rounds[0].vertices == std::vector<Var>{5});
  CHECK_THROWS(k_core(k4, 0));
}

TEST_CASE("round-based and sequential peeling agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t r = 2 + trial % 2;
    const std::uint32_t k = 2 + trial % 3;
    Hypergraph g = oracle::random_hypergraph(rng, 10, r, 8 + trial % 25);
    KCoreResult round = k_core(g, k);
    REQUIRE(round.core.vertices == k_core_sequential(g, k));
    REQUIRE((round.core_edges.empty() || is_k_dense(round.core.graph, k)));
    if (!round.core_edges.empty()) REQUIRE(k_core(round.core.graph, k).core.graph == round.core.graph);
  }
}

TEST_CASE("peel trace degrees") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t k = 3;
    Hypergraph g = oracle::random_hypergraph(rng, 9, 2, 10 + trial % 20);
    KCoreResult res = k_core(g, k);
    std::vector<bool> alive_edge(g.size(), true), alive_vertex(g.order() + 1, true);
    for (const PeelRound& pr : res.trace.rounds) {
      for (Var v : pr.vertices) {
        std::uint32_t deg = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
          if (alive_edge[i] && std::count(g.edge(i).begin(), g.edge(i).end(), v)) ++deg;
        REQUIRE(deg <= k - 1);
      }
      for (Var v : pr.vertices) alive_vertex[v] = false;
      for (std::size_t i : pr.removed) alive_edge[i] = false;
    }
  }
}
