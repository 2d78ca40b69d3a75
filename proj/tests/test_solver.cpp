#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "subcrit/catalog.hpp"
#include "subcrit/errors.hpp"
#include "subcrit/exhaustive.hpp"
#include "subcrit/experiments.hpp"
#include "subcrit/sampler.hpp"
#include "subcrit/solver.hpp"

using namespace subcrit;

TEST_CASE("exhaustive scans return the lexicographically least optimum") {
  // x1 = False first: (x1 v x2 v x3) alone is satisfied by 0,0,1.
  AssignmentScan s = best_assignment(Formula(3, 3, {Clause{1, 2, 3}}), 24);
  CHECK(s.satisfied == 1);
  CHECK(unpack_assignment(s.assignment, 3) == std::vector<bool>{false, false, true});
  AssignmentScan all = best_assignment(complete_formula(3, 3), 24);
  CHECK(all.satisfied == 7);
  CHECK(all.assignment == 0);
  CHECK_THROWS_AS(best_assignment(Formula(30, 3, {}), 28), BudgetExceeded);
  auto col = least_coloring(complete_hypergraph(3, 2), 3);
  REQUIRE(col);
  CHECK(*col == std::vector<std::uint32_t>{1, 2, 3});
  CHECK_FALSE(least_coloring(complete_hypergraph(4, 2), 3));
}

TEST_CASE("decide_sat examples") {
  SatVerdict fl = decide_sat(complementary_pair(3));
  CHECK(fl.status == SatStatus::kSat);
  CHECK(satisfies(complementary_pair(3), fl.assignment));
  CHECK(fl.max_satisfied == 2);

  Formula all = complete_formula(3, 3);
  SatVerdict v = decide_sat(all);
  CHECK(v.status == SatStatus::kUnsat);
  CHECK(v.max_satisfied == 7);
  REQUIRE(v.muf);
  CHECK(v.muf->formula == all);
  CHECK(v.muf->variables == std::vector<Var>{1, 2, 3});

  SatVerdict empty = decide_sat(Formula(4, 3, {}));
  CHECK(empty.status == SatStatus::kSat);
  CHECK(empty.assignment.size() == 4);
}

TEST_CASE("MUF extraction") {
  Formula all = complete_formula(3, 3);
  CHECK(extract_muf(all).formula == all);
  std::vector<Clause> more = all.clauses();
  more.push_back(Clause{4, 5, 6});
  Formula plus(6, 3, more);
  Subformula m = extract_muf(plus);
  CHECK(m.formula == all);
  CHECK(m.variables == std::vector<Var>{1, 2, 3});
  CHECK(extract_muf(m.formula).formula == m.formula);
  CHECK_THROWS_AS(extract_muf(complementary_pair(3)), std::invalid_argument);
  // Shifted copy: parent labels are kept.
  std::vector<Clause> shifted;
  for (const Clause& c : all.clauses()) {
    std::vector<Literal> l;
    for (Literal x : c.literals()) l.push_back(x > 0 ? x + 2 : x - 2);
    shifted.emplace_back(l);
  }
  shifted.push_back(Clause{1, 2, 3});
  SatVerdict sv = decide_sat(Formula(5, 3, shifted));
  REQUIRE(sv.muf);
  CHECK(sv.muf->variables == std::vector<Var>{3, 4, 5});
  CHECK(sv.max_satisfied == 8);
}

TEST_CASE("core budget is an explicit error") {
  SolverBudget tiny;
  tiny.max_core_order = 2;
  CHECK_THROWS_AS(decide_sat(complementary_pair(3), tiny), BudgetExceeded);
  tiny.max_colorings = 10;
  CHECK_THROWS_AS(decide_colorable(complete_hypergraph(4, 2), 3, tiny), BudgetExceeded);
}

TEST_CASE("decide_colorable examples") {
  Hypergraph k4 = complete_hypergraph(4, 2);
  ColorVerdict v = decide_colorable(k4, 3);
  CHECK_FALSE(v.colorable);
  REQUIRE(v.obstruction);
  CHECK(v.obstruction->graph == k4);

  std::vector<Edge> e = k4.edges();
  e.push_back({4, 5});
  ColorVerdict pend = decide_colorable(Hypergraph(5, 2, e), 3);
  REQUIRE(pend.obstruction);
  CHECK(canonical_key(pend.obstruction->graph) == canonical_key(k4));
  CHECK(pend.obstruction->vertices == std::vector<Var>{1, 2, 3, 4});

  Hypergraph tree(6, 2, {Edge{1, 2}, Edge{1, 3}, Edge{3, 4}, Edge{3, 5}, Edge{5, 6}});
  ColorVerdict t = decide_colorable(tree, 2);
  CHECK(t.colorable);
  CHECK(is_proper_coloring(tree, t.coloring, 2));
  ColorVerdict iso = decide_colorable(Hypergraph(3, 2, {}), 3);
  CHECK(iso.colorable);
  CHECK(iso.coloring.size() == 3);
}

TEST_CASE("solver agrees with brute force on random instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    Formula f = oracle::random_formula(rng, 9, 3, 10 + trial % 40);
    SatVerdict v = decide_sat(f);
    REQUIRE((v.status == SatStatus::kSat) == oracle::satisfiable(f));
    REQUIRE(v.max_satisfied == max_sat_oracle(f));
    REQUIRE(count_satisfied(f, v.assignment) == v.max_satisfied);
    if (v.muf) {
      REQUIRE(is_muf(v.muf->formula));
      for (const Clause& c : v.muf->parent_clauses()) REQUIRE(f.contains(c));
    }
  }
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint32_t r = 2 + trial % 2;
    Hypergraph g = oracle::random_hypergraph(rng, 8, r, 6 + trial % 30);
    ColorVerdict v = decide_colorable(g, r == 2 ? 3 : 2);
    const std::uint32_t k = r == 2 ? 3 : 2;
    REQUIRE(v.colorable == oracle::colorable(g, k));
    REQUIRE(v.colorable == colorable_oracle(g, k));
    if (v.colorable) REQUIRE(is_proper_coloring(g, v.coloring, k));
    else REQUIRE(is_min_non_k_colorable(v.obstruction->graph, k));
  }
}

TEST_CASE("pure literal steps preserve MaxSAT") {
  ModelParams p = params_from_alpha(14, 3, 2.0, ModelKind::kFormula);
  for (Seed s = 0; s < 150; ++s) {
    Formula f = sample_formula(p, s);
    REQUIRE(decide_sat(f).max_satisfied == max_sat_oracle(f));
  }
}
