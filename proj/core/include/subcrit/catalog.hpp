#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subcrit/instances.hpp"

namespace subcrit {

struct CatalogCaps {
  std::uint32_t order_cap = 12;
  std::uint32_t size_cap = 64;
  std::uint64_t node_budget = 200'000'000;  // search-tree nodes over the whole run
};

/// One isomorphism class of full formulae. `minimal`: no full proper
/// subformula (an MFF). `obstruction`: a minimal unsatisfiable formula.
struct FormulaEntry {
  Formula structure;
  IsoKey key;
  std::uint64_t aut = 0;
  std::int64_t excess = 0;
  bool minimal = false;
  bool solvable = false;  // satisfiable
  bool obstruction = false;

  std::uint32_t order() const { return structure.order(); }
  std::size_t size() const { return structure.size(); }
};

/// One isomorphism class of k-dense hypergraphs. `minimal`: no proper k-dense
/// subhypergraph. `obstruction`: minimal non-k-colorable.
struct HypergraphEntry {
  Hypergraph structure;
  IsoKey key;
  std::uint64_t aut = 0;
  std::int64_t excess = 0;
  bool minimal = false;
  bool solvable = false;  // k-colorable
  bool obstruction = false;

  std::uint32_t order() const { return structure.order(); }
  std::size_t size() const { return structure.size(); }
};

template <class Entry>
struct Catalog {
  std::uint32_t r = 0;
  std::uint32_t k = 0;  // 0 for formula catalogs
  std::int64_t max_excess = 0;
  CatalogCaps caps;
  std::uint32_t order_bound = 0;  // largest order the excess bound allows
  bool complete = false;
  std::vector<Entry> entries;  // sorted by (excess, order, size, key)

  const Entry* find(const IsoKey& key) const;
};

using FormulaCatalog = Catalog<FormulaEntry>;
using HypergraphCatalog = Catalog<HypergraphEntry>;

enum class EntryClass { kAny, kMinimal, kObstruction };

bool in_class(const FormulaEntry& e, EntryClass c);
bool in_class(const HypergraphEntry& e, EntryClass c);

/// Largest t with ex >= lower_bound_rate * t possible at excess `max_excess`:
/// floor(r s / (r-2)) for full formulae and floor(r s / ((k-1)(r-1)-1)) for
/// k-dense hypergraphs.
std::uint32_t full_order_bound(std::uint32_t r, std::int64_t max_excess);
std::uint32_t dense_order_bound(std::uint32_t r, std::uint32_t k, std::int64_t max_excess);

FormulaCatalog enumerate_full(std::uint32_t r, std::int64_t max_excess,
                              const CatalogCaps& caps = {});
HypergraphCatalog enumerate_k_dense(std::uint32_t r, std::uint32_t k,
                                    std::int64_t max_excess,
                                    const CatalogCaps& caps = {});

/// Keeps the entries containing no copy of a lower-excess entry. Requires a
/// complete catalog.
FormulaCatalog filter_minimal_full(const FormulaCatalog& catalog);
HypergraphCatalog filter_minimal_k_dense(const HypergraphCatalog& catalog);

inline constexpr std::uint32_t kBruteForceOrderCap = 24;
inline constexpr std::uint32_t kColoringOrderCap = 20;

bool classify_sat(const Formula& f, std::uint32_t cap = kBruteForceOrderCap);
bool is_muf(const Formula& f, std::uint32_t cap = kBruteForceOrderCap);
bool classify_colorable(const Hypergraph& g, std::uint32_t k,
                        std::uint32_t cap = kColoringOrderCap);
bool is_min_non_k_colorable(const Hypergraph& g, std::uint32_t k,
                            std::uint32_t cap = kColoringOrderCap);

/// Full formula with no full proper subformula, decided by deleting each
/// clause in turn and running the pure literal rule on the rest.
bool is_minimal_full(const Formula& f);
bool is_minimal_k_dense(const Hypergraph& g, std::uint32_t k);

std::vector<std::int64_t> excess_spectrum(const FormulaCatalog& catalog, EntryClass c);
std::vector<std::int64_t> excess_spectrum(const HypergraphCatalog& catalog, EntryClass c);

inline constexpr int kCatalogFormatVersion = 1;

void save_catalog(std::ostream& out, const FormulaCatalog& catalog);
void save_catalog(std::ostream& out, const HypergraphCatalog& catalog);
/// Reads either kind; the structure is re-canonicalized and must match the
/// stored key and automorphism count.
FormulaCatalog load_formula_catalog(std::istream& in);
HypergraphCatalog load_hypergraph_catalog(std::istream& in);
/// "sat" or "hypergraph", from the file's kind field.
std::string catalog_kind(std::istream& in);

}  // namespace subcrit
