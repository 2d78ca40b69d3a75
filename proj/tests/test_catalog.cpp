#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "subcrit/catalog.hpp"
#include "subcrit/errors.hpp"
#include "subcrit/reduction.hpp"
#include "subcrit/sampler.hpp"

using namespace subcrit;

namespace {

// Isomorphism classes of every clause (edge) subset of the given size over
// 1..t that is full (k-dense), by plain subset enumeration.
std::set<IsoKey> naive_full(std::uint32_t t, std::uint32_t r, std::size_t e) {
  const std::vector<Clause> cands = complete_formula(t, r).clauses();
  std::set<IsoKey> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == e) {
      std::vector<Clause> cl;
      for (std::size_t i : pick) cl.push_back(cands[i]);
      Formula f(t, r, std::move(cl));
      if (is_full(f)) out.insert(canonical_key(f));
      return;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::set<IsoKey> naive_dense(std::uint32_t t, std::uint32_t r, std::uint32_t k, std::size_t e) {
  const std::vector<Edge> cands = complete_hypergraph(t, r).edges();
  std::set<IsoKey> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == e) {
      std::vector<Edge> ed;
      for (std::size_t i : pick) ed.push_back(cands[i]);
      Hypergraph g(t, r, std::move(ed));
      if (is_k_dense(g, k)) out.insert(canonical_key(g));
      return;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Minimality by trying every nonempty proper clause subset.
bool minimal_full_oracle(const Formula& f) {
  const std::size_t m = f.size();
  for (std::uint64_t mask = 1; mask + 1 < (1ull << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    if (is_full(induced_by_clauses(f, idx).formula)) return false;
  }
  return true;
}

bool minimal_dense_oracle(const Hypergraph& g, std::uint32_t k) {
  const std::size_t m = g.size();
  for (std::uint64_t mask = 1; mask + 1 < (1ull << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    if (is_k_dense(induced_by_edges(g, idx).graph, k)) return false;
  }
  return true;
}

template <class Cat>
std::set<IsoKey> keys_of(const Cat& c) {
  std::set<IsoKey> out;
  for (const auto& e : c.entries) out.insert(e.key);
  return out;
}

}  // namespace

TEST_CASE("full formulae of excess at most one") {
  FormulaCatalog c = enumerate_full(3, 1);
  CHECK(c.complete);
  REQUIRE(c.entries.size() == 1);
  const FormulaEntry& e = c.entries[0];
  CHECK(e.order() == 3);
  CHECK(e.size() == 2);
  CHECK(e.excess == 1);
  CHECK(e.aut == 12);
  CHECK(e.key == canonical_key(complementary_pair(3)));
  CHECK(e.minimal);
  CHECK(e.solvable);
  CHECK_FALSE(e.obstruction);
  CHECK(enumerate_full(3, 0).entries.empty());
  CHECK(enumerate_full(3, 0).complete);
}

TEST_CASE("catalog entries obey the order bound and are isomorph-free") {
  for (std::uint32_t r : {3u, 4u}) {
    FormulaCatalog c = enumerate_full(r, 2);
    REQUIRE(c.complete);
    std::set<IsoKey> keys;
    for (const FormulaEntry& e : c.entries) {
      REQUIRE(is_full(e.structure));
      // ex >= (r-2) t / r, compared exactly.
      REQUIRE(static_cast<std::int64_t>(r) * e.excess >=
              static_cast<std::int64_t>(r - 2) * e.order());
      REQUIRE(e.aut == automorphism_count(e.structure));
      REQUIRE(keys.insert(e.key).second);
    }
    for (std::size_t i = 0; i < c.entries.size(); ++i)
      for (std::size_t j = i + 1; j < c.entries.size(); ++j)
        REQUIRE_FALSE(oracle::isomorphic(c.entries[i].structure, c.entries[j].structure));
  }
  HypergraphCatalog h = enumerate_k_dense(2, 3, 4);
  for (const HypergraphEntry& e : h.entries) {
    REQUIRE(is_k_dense(e.structure, 3));
    REQUIRE(2 * e.excess >= e.order());  // ((k-1)(r-1)-1) t / r = t / 2
  }
  CHECK(keys_of(h).size() == h.entries.size());
}

TEST_CASE("enumeration matches naive generation") {
  FormulaCatalog c = enumerate_full(3, 2);
  std::size_t naive = 0;
  for (std::uint32_t t = 3; t <= 5; ++t)
    for (std::size_t e = 1; static_cast<std::int64_t>(2 * e) - t <= 2; ++e)
      for (const IsoKey& key : naive_full(t, 3, e)) {
        ++naive;
        REQUIRE(c.find(key) != nullptr);
      }
  std::size_t small = 0;
  for (const FormulaEntry& e : c.entries) small += e.order() <= 5;
  CHECK(small == naive);

  for (auto [r, k, s] : {std::tuple{2u, 3u, 4}, std::tuple{3u, 2u, 2}, std::tuple{2u, 4u, 5}}) {
    HypergraphCatalog hc = enumerate_k_dense(r, k, s);
    REQUIRE(hc.complete);
    std::size_t count = 0;
    for (std::uint32_t t = r; t <= std::min(hc.order_bound, 7u); ++t)
      for (std::size_t e = 1; static_cast<std::int64_t>((r - 1) * e) - t <= s; ++e)
        for (const IsoKey& key : naive_dense(t, r, k, e)) {
          ++count;
          REQUIRE(hc.find(key) != nullptr);
        }
    std::size_t listed = 0;
    for (const HypergraphEntry& e : hc.entries) listed += e.order() <= 7;
    CHECK(listed == count);
  }
}

TEST_CASE("minimality by filtering agrees with the deletion test and brute force") {
  FormulaCatalog c = enumerate_full(3, 2);
  FormulaCatalog m = filter_minimal_full(c);
  std::set<IsoKey> flagged;
  for (const FormulaEntry& e : c.entries) {
    REQUIRE(e.minimal == minimal_full_oracle(e.structure));
    if (e.minimal) flagged.insert(e.key);
  }
  CHECK(keys_of(m) == flagged);
  CHECK(m.find(canonical_key(complementary_pair(3))) != nullptr);
  CHECK(keys_of(filter_minimal_full(m)) == keys_of(m));
  // F_L + F_L on disjoint variables contains F_L.
  CHECK(m.find(canonical_key(disjoint_union(complementary_pair(3), complementary_pair(3)))) == nullptr);

  HypergraphCatalog h = enumerate_k_dense(2, 3, 4);
  HypergraphCatalog hm = filter_minimal_k_dense(h);
  std::set<IsoKey> hflag;
  for (const HypergraphEntry& e : h.entries) {
    REQUIRE(e.minimal == minimal_dense_oracle(e.structure, 3));
    if (e.minimal) hflag.insert(e.key);
  }
  CHECK(keys_of(hm) == hflag);
}

TEST_CASE("minimal 3-dense graphs") {
  HypergraphCatalog c = enumerate_k_dense(2, 3, 2);
  HypergraphCatalog m = filter_minimal_k_dense(c);
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0].key == canonical_key(complete_hypergraph(4, 2)));
  CHECK(m.entries[0].aut == 24);
  CHECK(m.entries[0].obstruction);
  CHECK(enumerate_k_dense(2, 3, 1).entries.empty());
  CHECK_THROWS_AS(enumerate_k_dense(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_full(2, 1), std::invalid_argument);
}

TEST_CASE("classification") {
  Formula fl = complementary_pair(3);
  CHECK(classify_sat(fl));
  CHECK_FALSE(is_muf(fl));
  Formula all = complete_formula(3, 3);
  CHECK_FALSE(classify_sat(all));
  CHECK(is_muf(all));
  // Unused variable: not a MUF.
  CHECK_FALSE(is_muf(Formula(4, 3, all.clauses())));
  Hypergraph k4 = complete_hypergraph(4, 2);
  CHECK_FALSE(classify_colorable(k4, 3));
  std::vector<Edge> less = k4.edges();
  less.pop_back();
  CHECK(classify_colorable(Hypergraph(4, 2, less), 3));
  CHECK(is_min_non_k_colorable(k4, 3));
  CHECK_FALSE(is_min_non_k_colorable(Hypergraph(5, 2, k4.edges()), 3));
  CHECK_THROWS_AS(classify_sat(Formula(25, 3, {Clause{1, 2, 3}})), BudgetExceeded);
  CHECK_THROWS_AS(classify_colorable(Hypergraph(21, 2, {Edge{1, 2}}), 3), BudgetExceeded);
}

TEST_CASE("stored flags reproduce under reclassification") {
  for (const FormulaEntry& e : enumerate_full(3, 2).entries) {
    REQUIRE(e.solvable == classify_sat(e.structure));
    REQUIRE(e.solvable == oracle::satisfiable(e.structure));
    REQUIRE(e.obstruction == is_muf(e.structure));
  }
  for (const HypergraphEntry& e : enumerate_k_dense(2, 3, 4).entries) {
    REQUIRE(e.solvable == classify_colorable(e.structure, 3));
    REQUIRE(e.solvable == oracle::colorable(e.structure, 3));
    REQUIRE(e.obstruction == is_min_non_k_colorable(e.structure, 3));
  }
}

TEST_CASE("excess spectra") {
  CHECK(excess_spectrum(enumerate_full(3, 1), EntryClass::kMinimal) == std::vector<std::int64_t>{1});
  CHECK(excess_spectrum(enumerate_k_dense(2, 3, 2), EntryClass::kMinimal) ==
        std::vector<std::int64_t>{2});
  CHECK(excess_spectrum(enumerate_k_dense(2, 3, 2), EntryClass::kObstruction) ==
        std::vector<std::int64_t>{2});
  CHECK(excess_spectrum(enumerate_full(3, 0), EntryClass::kAny).empty());
  CHECK(excess_spectrum(enumerate_full(3, 2), EntryClass::kObstruction).empty());
}

TEST_CASE("caps mark catalogs incomplete") {
  CatalogCaps caps;
  caps.order_cap = 4;
  FormulaCatalog c = enumerate_full(3, 2, caps);
  CHECK_FALSE(c.complete);
  CHECK(c.order_bound == 6);
  CHECK_THROWS_AS(filter_minimal_full(c), IncompleteCatalog);
  CHECK_THROWS_AS(excess_spectrum(c, EntryClass::kMinimal), IncompleteCatalog);
  caps = {};
  caps.node_budget = 10;
  CHECK_FALSE(enumerate_full(3, 2, caps).complete);
  caps = {};
  caps.order_cap = 2;
  CHECK_THROWS_AS(enumerate_full(3, 1, caps), std::invalid_argument);
  caps = {};
  caps.size_cap = 0;
  CHECK_THROWS_AS(enumerate_full(3, 1, caps), std::invalid_argument);
}

TEST_CASE("catalog JSON round trip") {
  FormulaCatalog c = enumerate_full(3, 2);
  std::stringstream ss;
  save_catalog(ss, c);
  const std::string text = ss.str();
  std::istringstream kind_in(text);
  CHECK(catalog_kind(kind_in) == "sat");
  std::istringstream in(text);
  FormulaCatalog back = load_formula_catalog(in);
  CHECK(back.complete == c.complete);
  CHECK(back.max_excess == 2);
  REQUIRE(back.entries.size() == c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    CHECK(back.entries[i].structure == c.entries[i].structure);
    CHECK(back.entries[i].minimal == c.entries[i].minimal);
  }
  std::string tampered = text;
  auto pos = tampered.find("\"aut\": 12");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 9, "\"aut\": 11");
  std::istringstream bad(tampered);
  CHECK_THROWS(load_formula_catalog(bad));

  HypergraphCatalog h = enumerate_k_dense(2, 3, 3);
  std::stringstream hs;
  save_catalog(hs, h);
  HypergraphCatalog hb = load_hypergraph_catalog(hs);
  CHECK(hb.k == 3);
  CHECK(keys_of(hb) == keys_of(h));
  std::istringstream wrong(text);
  CHECK_THROWS(load_hypergraph_catalog(wrong));
}

TEST_CASE("unions of non-nested full formulae gain excess") {
  // Every pair of distinct labeled copies of F_L on 6 variables.
  const Formula all = complete_formula(6, 3);
  std::vector<Copy> copies = enumerate_copies(complementary_pair(3), all);
  REQUIRE(copies.size() == 80);
  for (std::size_t i = 0; i < copies.size(); ++i)
    for (std::size_t j = i + 1; j < copies.size(); ++j) {
      std::vector<std::size_t> u = copies[i].members;
      u.insert(u.end(), copies[j].members.begin(), copies[j].members.end());
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      REQUIRE(excess(induced_by_clauses(all, u).formula) >= 2);
    }
}

TEST_CASE("random full formulae and k-dense cores obey the excess bounds") {
  ModelParams p = params_from_alpha(40, 3, 2.5, ModelKind::kFormula);
  ModelParams g = params_from_alpha(40, 2, 4.0, ModelKind::kHypergraph);
  int seen = 0;
  for (Seed s = 0; s < 300; ++s) {
    PureLiteralResult r = pure_literal_core(sample_formula(p, s, SamplerMode::kSkip));
    if (!r.core_clauses.empty()) {
      ++seen;
      REQUIRE(3 * excess(r.core.formula) >= static_cast<std::int64_t>(r.core.formula.order()));
    }
    KCoreResult kc = k_core(sample_hypergraph(g, s, SamplerMode::kSkip), 3);
    if (!kc.core_edges.empty())
      REQUIRE(2 * excess(kc.core.graph) >= static_cast<std::int64_t>(kc.core.graph.order()));
  }
  CHECK(seen > 0);
}
