#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "subcrit/errors.hpp"
#include "subcrit/instances.hpp"

using namespace subcrit;

namespace {

Formula fl() { return complementary_pair(3); }

Hypergraph k4() { return complete_hypergraph(4, 2); }

}  // namespace

TEST_CASE("clauses are validated and sorted by variable") {
  Clause c{3, -1, 2};
  CHECK(c[0] == -1);
  CHECK(c[2] == 3);
  CHECK(c.contains(-1));
  CHECK_FALSE(c.contains(1));
  CHECK(c.mentions(2));
  CHECK_THROWS_AS(Clause({1, -1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Clause({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("formulae reject duplicates, out-of-range and mixed widths") {
  CHECK_THROWS(Formula(3, 3, {Clause{1, 2, 3}, Clause{1, 2, 3}}));
  CHECK_THROWS(Formula(2, 3, {Clause{1, 2, 3}}));
  CHECK_THROWS(Formula(4, 3, {Clause{1, 2, 3}, Clause{1, 2}}));
  CHECK_THROWS(Hypergraph(4, 2, {Edge{1, 2}, Edge{1, 2, 3}}));
  CHECK_THROWS(Hypergraph(4, 2, {Edge{1, 2}, Edge{2, 1}}));
}

TEST_CASE("excess") {
  CHECK(excess(fl()) == 1);
  CHECK(excess(Formula(3, 3, {Clause{1, 2, 3}})) == -1);
  CHECK(excess(Formula(5, 3, {})) == -5);
  CHECK(excess(k4()) == 2);
  CHECK(excess(Hypergraph(3, 3, {Edge{1, 2, 3}})) == -1);
  CHECK(excess(complete_hypergraph(3, 2)) == 0);
}

TEST_CASE("fullness and density predicates") {
  CHECK(is_full(fl()));
  CHECK_FALSE(is_full(Formula(3, 3, {Clause{1, 2, 3}})));
  CHECK_FALSE(is_full(Formula(3, 3, {})));
  CHECK(is_k_dense(k4(), 3));
  CHECK_FALSE(is_k_dense(Hypergraph(3, 2, {Edge{1, 2}, Edge{2, 3}}), 2));
  CHECK_FALSE(is_k_dense(Hypergraph(4, 2, {}), 1));
}

TEST_CASE("canonical keys on small examples") {
  CHECK(canonical_key(Formula(3, 3, {Clause{1, 2, -3}})) ==
        canonical_key(Formula(3, 3, {Clause{1, 2, 3}})));
  CHECK(canonical_key(fl()) == canonical_key(Formula(3, 3, {Clause{-2, 3, 1}, Clause{2, -3, -1}})));
  CHECK(canonical_key(fl()) != canonical_key(Formula(3, 3, {Clause{1, 2, 3}})));
  // Same counts, different structure: a complementary pair vs. two clauses
  // sharing one sign pattern but differing in one literal.
  CHECK(canonical_key(fl()) != canonical_key(Formula(3, 3, {Clause{1, 2, 3}, Clause{-1, 2, 3}})));
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(fl()) == 12);
  CHECK(automorphism_count(k4()) == 24);
  CHECK(automorphism_count(Formula(3, 3, {Clause{1, 2, 3}})) == 6);
  CHECK(automorphism_count(complementary_pair(4)) == 48);
  CHECK(automorphism_count(complete_formula(3, 3)) == 48);
}

TEST_CASE("canonicalization is invariant under random group elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t n = 3 + trial % 5;
    const std::uint32_t m = 1 + trial % 7;
    Formula f = oracle::random_formula(rng, n, 3, m);
    Formula g = oracle::shuffle(f, rng);
    REQUIRE(canonical_key(f) == canonical_key(g));
    Hypergraph h = oracle::random_hypergraph(rng, n, 2 + trial % 2, m + 2);
    REQUIRE(canonical_key(h) == canonical_key(oracle::shuffle(h, rng)));
  }
}

TEST_CASE("automorphism counts agree with brute force and orbit-stabilizer") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint32_t n = 3 + trial % 3;
    Formula f = oracle::random_formula(rng, n, 3, 1 + trial % 6);
    const std::uint64_t aut = automorphism_count(f);
    REQUIRE(aut == oracle::automorphisms(f));
    std::uint64_t group = 1u << n;
    for (std::uint32_t i = 2; i <= n; ++i) group *= i;
    REQUIRE(group % aut == 0);
    REQUIRE(oracle::orbit_size(f) * aut == group);
  }
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph g = oracle::random_hypergraph(rng, 4 + trial % 4, 2 + trial % 2, 2 + trial % 9);
    REQUIRE(automorphism_count(g) == oracle::automorphisms(g));
  }
}

TEST_CASE("equal keys exactly when isomorphic") {
  std::mt19937_64 rng(13);
  int iso = 0;
  for (int trial = 0; trial < 600; ++trial) {
    Formula a = oracle::random_formula(rng, 4, 3, 3);
    Formula b = oracle::random_formula(rng, 4, 3, 3);
    if (a.size() != b.size()) continue;
    const bool same = oracle::isomorphic(a, b);
    iso += same;
    REQUIRE((canonical_key(a) == canonical_key(b)) == same);
  }
  CHECK(iso > 0);
  for (int trial = 0; trial < 600; ++trial) {
    Hypergraph a = oracle::random_hypergraph(rng, 5, 2, 5);
    Hypergraph b = oracle::random_hypergraph(rng, 5, 2, 5);
    if (a.size() != b.size()) continue;
    REQUIRE((canonical_key(a) == canonical_key(b)) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("canonicalization respects its order cap") {
  Formula big = complementary_pair(3);
  Formula wide(17, 3, {Clause{1, 2, 3}});
  CHECK_THROWS_AS(canonical_key(wide), BudgetExceeded);
  CanonOptions opts;
  opts.max_order = 20;
  CHECK_NOTHROW(canonical_key(wide, opts));
  opts.node_budget = 1;
  CHECK_THROWS_AS(canonicalize(complete_formula(5, 3), opts), BudgetExceeded);
  CHECK(canonical_key(big).hex().size() == 2 * canonical_key(big).bytes.size());
}

TEST_CASE("copy counting") {
  CHECK(count_copies(fl(), fl()) == 1);
  CHECK(count_copies(fl(), complete_formula(3, 3)) == 4);
  Hypergraph g = k4();
  CHECK(count_copies(Hypergraph(2, 2, {Edge{1, 2}}), g) == g.size());
  CHECK(count_copies(complete_hypergraph(3, 2), g) == 4);
  CHECK(count_copies(k4(), complete_hypergraph(3, 2)) == 0);
  auto copies = enumerate_copies(fl(), complete_formula(3, 3));
  REQUIRE(copies.size() == 4);
  for (const Copy& c : copies) {
    CHECK(c.members.size() == 2);
    CHECK(c.variables == std::vector<Var>{1, 2, 3});
  }
}

TEST_CASE("copy counting matches exhaustive injections") {
  std::mt19937_64 rng(17);
  const Formula patterns[] = {fl(), Formula(4, 3, {Clause{1, 2, 3}, Clause{-1, -2, 4}, Clause{-3, -4, 1}}),
                              Formula(3, 3, {Clause{1, 2, 3}})};
  for (int trial = 0; trial < 60; ++trial) {
    Formula host = oracle::random_formula(rng, 5 + trial % 2, 3, 10 + trial % 15);
    for (const Formula& p : patterns) REQUIRE(count_copies(p, host) == oracle::copies_in(p, host));
  }
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph host = oracle::random_hypergraph(rng, 6, 2, 6 + trial % 10);
    REQUIRE(count_copies(k4(), host) == oracle::copies_in(k4(), host));
    REQUIRE(count_copies(complete_hypergraph(3, 2), host) ==
            oracle::copies_in(complete_hypergraph(3, 2), host));
  }
}

TEST_CASE("excess adds over disjoint unions") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    Formula a = oracle::random_formula(rng, 3 + trial % 4, 3, 1 + trial % 5);
    Formula b = oracle::random_formula(rng, 3 + trial % 3, 3, 1 + trial % 4);
    Formula u = disjoint_union(a, b);
    REQUIRE(u.order() == a.order() + b.order());
    REQUIRE(excess(u) == excess(a) + excess(b));
  }
}

TEST_CASE("induced subformulae drop unused variables") {
  Formula f(5, 3, {Clause{1, 2, 3}, Clause{-1, -2, -3}, Clause{1, 4, 5}});
  std::vector<std::size_t> idx{0, 1};
  Subformula s = induced_by_clauses(f, idx);
  CHECK(s.formula.order() == 3);
  CHECK(s.variables == std::vector<Var>{1, 2, 3});
  CHECK(canonical_key(s.formula) == canonical_key(fl()));
  std::vector<std::size_t> last{2};
  Subformula t = induced_by_clauses(f, last);
  CHECK(t.variables == std::vector<Var>{1, 4, 5});
  CHECK(t.parent_clauses() == std::vector<Clause>{Clause{1, 4, 5}});
}
