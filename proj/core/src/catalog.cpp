#include "subcrit/catalog.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "subcrit/errors.hpp"
#include "subcrit/exhaustive.hpp"
#include "subcrit/reduction.hpp"

namespace subcrit {

using nlohmann::json;

namespace {

struct NodeBudgetHit {};

// Lexicographic r-subsets of 1..t.
std::vector<std::vector<Var>> subsets(std::uint32_t t, std::uint32_t r) {
  std::vector<std::vector<Var>> out;
  std::vector<Var> cur;
  auto rec = [&](auto&& self, Var next) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (Var v = next; v + (r - cur.size()) <= t + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Chooses `total` candidates from 0..m-1 with "smallest unmet demand must be
// served" branching. Each candidate set is produced exactly once because a
// branch forbids its earlier siblings. Candidate 0 is forced into every set.
class CoverSearch {
 public:
  struct Problem {
    std::size_t candidates = 0;
    std::size_t demands = 0;
    std::uint32_t width = 0;
    std::vector<std::vector<std::size_t>> demand_of;    // per candidate
    std::vector<std::vector<std::size_t>> serving;      // per demand
    std::vector<std::uint32_t> required;                // per demand
  };

  CoverSearch(const Problem& p, std::uint64_t& nodes, std::uint64_t budget)
      : p_(p), nodes_(nodes), budget_(budget), have_(p.demands, 0),
        chosen_(p.candidates, false), forbidden_(p.candidates, false) {}

  template <class Emit>
  void run(std::size_t total, Emit&& emit) {
    deficit_ = 0;
    for (std::uint32_t q : p_.required) deficit_ += q;
    choose(0);
    dfs(total - 1, emit);
  }

 private:
  void choose(std::size_t c) {
    chosen_[c] = true;
    picks_.push_back(c);
    for (std::size_t d : p_.demand_of[c])
      if (have_[d]++ < p_.required[d]) --deficit_;
  }
  void unchoose(std::size_t c) {
    chosen_[c] = false;
    picks_.pop_back();
    for (std::size_t d : p_.demand_of[c])
      if (--have_[d] < p_.required[d]) ++deficit_;
  }

  template <class Emit>
  void dfs(std::size_t remaining, Emit& emit) {
    if (++nodes_ > budget_) throw NodeBudgetHit{};
    if (deficit_ > remaining * p_.width) return;
    if (deficit_ == 0) {
      free_fill(0, remaining, emit);
      return;
    }
    if (remaining == 0) return;
    std::size_t target = 0;
    while (have_[target] >= p_.required[target]) ++target;
    std::vector<std::size_t> banned;
    for (std::size_t c : p_.serving[target]) {
      if (chosen_[c] || forbidden_[c]) continue;
      choose(c);
      dfs(remaining - 1, emit);
      unchoose(c);
      forbidden_[c] = true;
      banned.push_back(c);
    }
    for (std::size_t c : banned) forbidden_[c] = false;
  }

  template <class Emit>
  void free_fill(std::size_t start, std::size_t remaining, Emit& emit) {
    if (remaining == 0) {
      emit(picks_);
      return;
    }
    for (std::size_t c = start; c < p_.candidates; ++c) {
      if (chosen_[c] || forbidden_[c]) continue;
      if (++nodes_ > budget_) throw NodeBudgetHit{};
      chosen_[c] = true;
      picks_.push_back(c);
      free_fill(c + 1, remaining - 1, emit);
      picks_.pop_back();
      chosen_[c] = false;
    }
  }

  const Problem& p_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<std::uint32_t> have_;
  std::vector<bool> chosen_, forbidden_;
  std::vector<std::size_t> picks_;
  std::size_t deficit_ = 0;
};

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void check_caps(const CatalogCaps& caps, std::uint32_t r) {
  if (caps.order_cap < r) throw std::invalid_argument("order cap below the clause width");
  if (caps.size_cap == 0) throw std::invalid_argument("size cap must be positive");
  if (caps.order_cap > kBruteForceOrderCap)
    throw std::invalid_argument("order cap exceeds the classification cap");
}

template <class Entry>
void sort_entries(std::vector<Entry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tuple(a.excess, a.order(), a.size(), a.key) <
           std::tuple(b.excess, b.order(), b.size(), b.key);
  });
}

template <class Entry>
std::vector<std::int64_t> spectrum(const Catalog<Entry>& c, EntryClass cls) {
  if (!c.complete) throw IncompleteCatalog("excess spectrum needs a complete catalog");
  std::vector<std::int64_t> out;
  for (const Entry& e : c.entries)
    if (in_class(e, cls)) out.push_back(e.excess);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class Entry>
Catalog<Entry> filter_minimal(const Catalog<Entry>& catalog) {
  if (!catalog.complete)
    throw IncompleteCatalog("minimality filtering needs a complete catalog");
  CanonOptions opts;
  opts.max_order = std::max<std::uint32_t>(opts.max_order, catalog.caps.order_cap);
  Catalog<Entry> out = catalog;
  out.entries.clear();
  // A proper full (k-dense) substructure always has strictly smaller excess,
  // so only lower-excess survivors need to be tried as patterns.
  for (const Entry& e : catalog.entries) {
    bool minimal = true;
    for (const Entry& m : out.entries) {
      if (m.excess >= e.excess) break;
      if (count_copies(m.structure, e.structure, opts) > 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.entries.push_back(e);
      out.entries.back().minimal = true;
    }
  }
  return out;
}

json caps_json(const CatalogCaps& c) {
  return {{"order_cap", c.order_cap}, {"size_cap", c.size_cap}, {"node_budget", c.node_budget}};
}

template <class Entry>
json header_json(const Catalog<Entry>& c, const char* kind) {
  return {{"format_version", kCatalogFormatVersion},
          {"kind", kind},
          {"r", c.r},
          {"k", c.k},
          {"max_excess", c.max_excess},
          {"caps", caps_json(c.caps)},
          {"order_bound", c.order_bound},
          {"complete", c.complete},
          {"entries", json::array()}};
}

template <class Entry>
void read_header(const json& j, Catalog<Entry>& c, const char* kind) {
  if (j.at("format_version").get<int>() != kCatalogFormatVersion)
    throw std::runtime_error("unsupported catalog format version");
  if (j.at("kind").get<std::string>() != kind)
    throw std::runtime_error(std::string("catalog kind is not ") + kind);
  c.r = j.at("r");
  c.k = j.at("k");
  c.max_excess = j.at("max_excess");
  c.caps.order_cap = j.at("caps").at("order_cap");
  c.caps.size_cap = j.at("caps").at("size_cap");
  c.caps.node_budget = j.at("caps").at("node_budget");
  c.order_bound = j.at("order_bound");
  c.complete = j.at("complete");
}

template <class Entry, class S>
void verify_loaded(Entry& e, const S& structure, const json& je) {
  CanonOptions opts;
  opts.max_order = std::max<std::uint32_t>(opts.max_order, structure.order());
  Canonical canon = canonicalize(structure, opts);
  if (canon.key.hex() != je.at("key").get<std::string>() ||
      canon.automorphisms != je.at("aut").get<std::uint64_t>() ||
      excess(structure) != je.at("excess").get<std::int64_t>())
    throw std::runtime_error("catalog entry does not match its stored invariants");
  e.key = canon.key;
  e.aut = canon.automorphisms;
  e.excess = excess(structure);
}

}  // namespace

template <class Entry>
const Entry* Catalog<Entry>::find(const IsoKey& key) const {
  for (const Entry& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

template struct Catalog<FormulaEntry>;
template struct Catalog<HypergraphEntry>;

bool in_class(const FormulaEntry& e, EntryClass c) {
  return c == EntryClass::kAny || (c == EntryClass::kMinimal && e.minimal) ||
         (c == EntryClass::kObstruction && e.obstruction);
}

bool in_class(const HypergraphEntry& e, EntryClass c) {
  return c == EntryClass::kAny || (c == EntryClass::kMinimal && e.minimal) ||
         (c == EntryClass::kObstruction && e.obstruction);
}

std::uint32_t full_order_bound(std::uint32_t r, std::int64_t max_excess) {
  if (r < 3) throw std::invalid_argument("full formula catalogs need r >= 3");
  if (max_excess < 0) return 0;
  return static_cast<std::uint32_t>(static_cast<std::int64_t>(r) * max_excess / (r - 2));
}

std::uint32_t dense_order_bound(std::uint32_t r, std::uint32_t k, std::int64_t max_excess) {
  if (r < 2 || k < 2 || r + k <= 4)
    throw std::invalid_argument("k-dense catalogs need r, k >= 2 and r + k > 4");
  if (max_excess < 0) return 0;
  const std::int64_t rate = static_cast<std::int64_t>(k - 1) * (r - 1) - 1;
  return static_cast<std::uint32_t>(static_cast<std::int64_t>(r) * max_excess / rate);
}

FormulaCatalog enumerate_full(std::uint32_t r, std::int64_t max_excess,
                              const CatalogCaps& caps) {
  if (max_excess < 0) throw std::invalid_argument("max excess must be nonnegative");
  FormulaCatalog cat;
  cat.r = r;
  cat.max_excess = max_excess;
  cat.caps = caps;
  cat.order_bound = full_order_bound(r, max_excess);
  check_caps(caps, r);
  cat.complete = cat.order_bound <= caps.order_cap;

  CanonOptions opts;
  opts.max_order = std::max<std::uint32_t>(opts.max_order, caps.order_cap);
  std::map<IsoKey, Formula> found;
  std::uint64_t nodes = 0;
  const std::uint32_t t_max = std::min(cat.order_bound, caps.order_cap);
  try {
    for (std::uint32_t t = r; t <= t_max; ++t) {
      std::vector<Clause> cands;
      for (const auto& vs : subsets(t, r))
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
          std::vector<Literal> lits;
          for (std::uint32_t i = 0; i < r; ++i)
            lits.push_back((mask >> i) & 1u ? -static_cast<Literal>(vs[i])
                                             : static_cast<Literal>(vs[i]));
          cands.emplace_back(std::move(lits));
        }
      std::sort(cands.begin(), cands.end(), [](const Clause& a, const Clause& b) {
        // All-positive clause on 1..r first, so it can be forced.
        auto rank = [](const Clause& c) {
          for (std::size_t i = 0; i < c.width(); ++i)
            if (c[i] != static_cast<Literal>(i + 1)) return 1;
          return 0;
        };
        return std::pair(rank(a), a) < std::pair(rank(b), b);
      });
      CoverSearch::Problem prob;
      prob.candidates = cands.size();
      prob.demands = 2 * t;
      prob.width = r;
      prob.required.assign(2 * t, 1);
      prob.serving.resize(2 * t);
      prob.demand_of.resize(cands.size());
      for (std::size_t c = 0; c < cands.size(); ++c)
        for (Literal l : cands[c].literals()) {
          const std::size_t d = 2 * (var_of(l) - 1) + (l < 0 ? 1 : 0);
          prob.demand_of[c].push_back(d);
          prob.serving[d].push_back(c);
        }
      const std::int64_t e_min = ceil_div(2 * t, r);
      const std::int64_t e_max = (max_excess + t) / (r - 1);
      for (std::int64_t e = e_min; e <= e_max; ++e) {
        if (e > static_cast<std::int64_t>(caps.size_cap)) {
          cat.complete = false;
          break;
        }
        if (e > static_cast<std::int64_t>(cands.size())) break;
        CoverSearch search(prob, nodes, caps.node_budget);
        search.run(static_cast<std::size_t>(e), [&](const std::vector<std::size_t>& picks) {
          std::vector<Clause> cl;
          for (std::size_t c : picks) cl.push_back(cands[c]);
          Formula f(t, r, std::move(cl));
          IsoKey key = canonical_key(f, opts);
          found.try_emplace(std::move(key), std::move(f));
        });
      }
    }
  } catch (const NodeBudgetHit&) {
    cat.complete = false;
  }
  for (auto& [key, f] : found) {
    FormulaEntry e;
    e.key = key;
    e.aut = automorphism_count(f, opts);
    e.excess = excess(f);
    e.minimal = is_minimal_full(f);
    e.solvable = classify_sat(f);
    e.obstruction = !e.solvable && is_muf(f);
    e.structure = std::move(f);
    cat.entries.push_back(std::move(e));
  }
  sort_entries(cat.entries);
  return cat;
}

HypergraphCatalog enumerate_k_dense(std::uint32_t r, std::uint32_t k,
                                    std::int64_t max_excess, const CatalogCaps& caps) {
  if (max_excess < 0) throw std::invalid_argument("max excess must be nonnegative");
  HypergraphCatalog cat;
  cat.r = r;
  cat.k = k;
  cat.max_excess = max_excess;
  cat.caps = caps;
  cat.order_bound = dense_order_bound(r, k, max_excess);
  check_caps(caps, r);
  if (caps.order_cap > kColoringOrderCap)
    throw std::invalid_argument("order cap exceeds the coloring cap");
  cat.complete = cat.order_bound <= caps.order_cap;

  CanonOptions opts;
  opts.max_order = std::max<std::uint32_t>(opts.max_order, caps.order_cap);
  std::map<IsoKey, Hypergraph> found;
  std::uint64_t nodes = 0;
  const std::uint32_t t_max = std::min(cat.order_bound, caps.order_cap);
  try {
    for (std::uint32_t t = r; t <= t_max; ++t) {
      std::vector<Edge> cands = subsets(t, r);  // {1..r} is first
      CoverSearch::Problem prob;
      prob.candidates = cands.size();
      prob.demands = t;
      prob.width = r;
      prob.required.assign(t, k);
      prob.serving.resize(t);
      prob.demand_of.resize(cands.size());
      for (std::size_t c = 0; c < cands.size(); ++c)
        for (Var v : cands[c]) {
          prob.demand_of[c].push_back(v - 1);
          prob.serving[v - 1].push_back(c);
        }
      const std::int64_t e_min = ceil_div(static_cast<std::int64_t>(k) * t, r);
      const std::int64_t e_max = (max_excess + t) / (r - 1);
      for (std::int64_t e = e_min; e <= e_max; ++e) {
        if (e > static_cast<std::int64_t>(caps.size_cap)) {
          cat.complete = false;
          break;
        }
        if (e > static_cast<std::int64_t>(cands.size())) break;
        CoverSearch search(prob, nodes, caps.node_budget);
        search.run(static_cast<std::size_t>(e), [&](const std::vector<std::size_t>& picks) {
          std::vector<Edge> ed;
          for (std::size_t c : picks) ed.push_back(cands[c]);
          Hypergraph g(t, r, std::move(ed));
          IsoKey key = canonical_key(g, opts);
          found.try_emplace(std::move(key), std::move(g));
        });
      }
    }
  } catch (const NodeBudgetHit&) {
    cat.complete = false;
  }
  for (auto& [key, g] : found) {
    HypergraphEntry e;
    e.key = key;
    e.aut = automorphism_count(g, opts);
    e.excess = excess(g);
    e.minimal = is_minimal_k_dense(g, k);
    e.solvable = classify_colorable(g, k);
    e.obstruction = !e.solvable && is_min_non_k_colorable(g, k);
    e.structure = std::move(g);
    cat.entries.push_back(std::move(e));
  }
  sort_entries(cat.entries);
  return cat;
}

FormulaCatalog filter_minimal_full(const FormulaCatalog& catalog) {
  return filter_minimal(catalog);
}

HypergraphCatalog filter_minimal_k_dense(const HypergraphCatalog& catalog) {
  return filter_minimal(catalog);
}

bool classify_sat(const Formula& f, std::uint32_t cap) {
  return satisfiable_by_exhaustion(f, cap);
}

bool is_muf(const Formula& f, std::uint32_t cap) {
  if (f.order() > cap) throw BudgetExceeded("formula order exceeds the brute-force cap");
  if (f.empty()) return false;
  std::vector<bool> used(f.order(), false);
  for (const Clause& c : f.clauses())
    for (Literal l : c.literals()) used[var_of(l) - 1] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) return false;
  if (satisfiable_by_exhaustion(f, cap)) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Clause> rest = f.clauses();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!satisfiable_by_exhaustion(Formula(f.order(), f.width(), std::move(rest)), cap))
      return false;
  }
  return true;
}

bool classify_colorable(const Hypergraph& g, std::uint32_t k, std::uint32_t cap) {
  if (g.order() > cap) throw BudgetExceeded("hypergraph order exceeds the coloring cap");
  return least_coloring(g, k).has_value();
}

bool is_min_non_k_colorable(const Hypergraph& g, std::uint32_t k, std::uint32_t cap) {
  if (g.order() > cap) throw BudgetExceeded("hypergraph order exceeds the coloring cap");
  if (g.empty()) return false;
  for (std::uint32_t d : g.degrees())
    if (d == 0) return false;
  if (least_coloring(g, k)) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<Edge> rest = g.edges();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!least_coloring(Hypergraph(g.order(), g.width(), std::move(rest)), k)) return false;
  }
  return true;
}

bool is_minimal_full(const Formula& f) {
  if (!is_full(f)) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Clause> rest = f.clauses();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!pure_literal_core(Formula(f.order(), f.width(), std::move(rest))).core_clauses.empty())
      return false;
  }
  return true;
}

bool is_minimal_k_dense(const Hypergraph& g, std::uint32_t k) {
  if (!is_k_dense(g, k)) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<Edge> rest = g.edges();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!k_core(Hypergraph(g.order(), g.width(), std::move(rest)), k).core_edges.empty())
      return false;
  }
  return true;
}

std::vector<std::int64_t> excess_spectrum(const FormulaCatalog& c, EntryClass cls) {
  return spectrum(c, cls);
}

std::vector<std::int64_t> excess_spectrum(const HypergraphCatalog& c, EntryClass cls) {
  return spectrum(c, cls);
}

void save_catalog(std::ostream& out, const FormulaCatalog& c) {
  json j = header_json(c, "sat");
  for (const FormulaEntry& e : c.entries) {
    json clauses = json::array();
    for (const Clause& cl : e.structure.clauses())
      clauses.push_back(std::vector<Literal>(cl.literals().begin(), cl.literals().end()));
    j["entries"].push_back({{"order", e.order()},
                            {"size", e.size()},
                            {"excess", e.excess},
                            {"aut", e.aut},
                            {"key", e.key.hex()},
                            {"mff", e.minimal},
                            {"satisfiable", e.solvable},
                            {"muf", e.obstruction},
                            {"clauses", std::move(clauses)}});
  }
  out << j.dump(1) << '\n';
}

void save_catalog(std::ostream& out, const HypergraphCatalog& c) {
  json j = header_json(c, "hypergraph");
  for (const HypergraphEntry& e : c.entries)
    j["entries"].push_back({{"order", e.order()},
                            {"size", e.size()},
                            {"excess", e.excess},
                            {"aut", e.aut},
                            {"key", e.key.hex()},
                            {"minimal_k_dense", e.minimal},
                            {"k_colorable", e.solvable},
                            {"min_non_k_colorable", e.obstruction},
                            {"edges", e.structure.edges()}});
  out << j.dump(1) << '\n';
}

FormulaCatalog load_formula_catalog(std::istream& in) {
  json j = json::parse(in);
  FormulaCatalog c;
  read_header(j, c, "sat");
  for (const json& je : j.at("entries")) {
    std::vector<Clause> clauses;
    for (const json& cl : je.at("clauses")) clauses.emplace_back(cl.get<std::vector<Literal>>());
    FormulaEntry e;
    e.structure = Formula(je.at("order"), c.r, std::move(clauses));
    verify_loaded(e, e.structure, je);
    e.minimal = je.at("mff");
    e.solvable = je.at("satisfiable");
    e.obstruction = je.at("muf");
    c.entries.push_back(std::move(e));
  }
  sort_entries(c.entries);
  return c;
}

HypergraphCatalog load_hypergraph_catalog(std::istream& in) {
  json j = json::parse(in);
  HypergraphCatalog c;
  read_header(j, c, "hypergraph");
  for (const json& je : j.at("entries")) {
    HypergraphEntry e;
    e.structure = Hypergraph(je.at("order"), c.r, je.at("edges").get<std::vector<Edge>>());
    verify_loaded(e, e.structure, je);
    e.minimal = je.at("minimal_k_dense");
    e.solvable = je.at("k_colorable");
    e.obstruction = je.at("min_non_k_colorable");
    c.entries.push_back(std::move(e));
  }
  sort_entries(c.entries);
  return c;
}

std::string catalog_kind(std::istream& in) {
  json j = json::parse(in);
  return j.at("kind").get<std::string>();
}

}  // namespace subcrit
