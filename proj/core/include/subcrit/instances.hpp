#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace subcrit {

/// Variable / vertex label, 1-based.
using Var = std::uint32_t;

/// Signed variable in DIMACS convention: +v is v, -v is its negation.
using Literal = std::int32_t;

inline Var var_of(Literal lit) { return static_cast<Var>(lit < 0 ? -lit : lit); }

/// An r-clause: literals on distinct variables, kept sorted by variable.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals)
      : Clause(std::vector<Literal>(literals)) {}

  std::size_t width() const { return lits_.size(); }
  std::span<const Literal> literals() const { return lits_; }
  Literal operator[](std::size_t i) const { return lits_[i]; }
  Var variable(std::size_t i) const { return var_of(lits_[i]); }
  bool positive(std::size_t i) const { return lits_[i] > 0; }
  bool contains(Literal lit) const;
  bool mentions(Var v) const;

  auto operator<=>(const Clause&) const = default;

 private:
  std::vector<Literal> lits_;
};

/// A set of r-clauses over variables 1..order. Variables that occur in no
/// clause still count towards the order.
class Formula {
 public:
  Formula() = default;
  Formula(std::uint32_t order, std::uint32_t width, std::vector<Clause> clauses);

  std::uint32_t order() const { return order_; }
  std::uint32_t width() const { return width_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_[i]; }

  /// Index of `c` in clauses(), or size() when absent.
  std::size_t find(const Clause& c) const;
  bool contains(const Clause& c) const { return find(c) != size(); }

  bool operator==(const Formula&) const = default;

 private:
  std::uint32_t order_ = 0;
  std::uint32_t width_ = 0;
  std::vector<Clause> clauses_;
};

/// Sorted vertex list of an r-edge.
using Edge = std::vector<Var>;

/// An r-uniform hypergraph on vertices 1..order.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::uint32_t order, std::uint32_t width, std::vector<Edge> edges);

  std::uint32_t order() const { return order_; }
  std::uint32_t width() const { return width_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::size_t find(const Edge& e) const;
  bool contains(const Edge& e) const { return find(e) != size(); }
  std::vector<std::uint32_t> degrees() const;  // index 0 is vertex 1

  bool operator==(const Hypergraph&) const = default;

 private:
  std::uint32_t order_ = 0;
  std::uint32_t width_ = 0;
  std::vector<Edge> edges_;
};

/// A subformula together with the parent labels of its variables:
/// local variable i+1 is parent variable `variables[i]`.
struct Subformula {
  Formula formula;
  std::vector<Var> variables;

  /// Clauses rewritten with parent labels.
  std::vector<Clause> parent_clauses() const;
};

struct SubHypergraph {
  Hypergraph graph;
  std::vector<Var> vertices;

  std::vector<Edge> parent_edges() const;
};

/// Subformula spanned by the given clauses; unused variables are dropped.
Subformula induced_by_clauses(const Formula& parent,
                              std::span<const std::size_t> clause_indices);
SubHypergraph induced_by_edges(const Hypergraph& parent,
                               std::span<const std::size_t> edge_indices);

// (r-1) e(H) - |H|
std::int64_t excess(const Formula& f);
std::int64_t excess(const Hypergraph& g);

/// Nonempty and every variable occurs with both signs.
bool is_full(const Formula& f);
/// Nonempty and every vertex has degree >= k.
bool is_k_dense(const Hypergraph& g, std::uint32_t k);

/// Canonical byte string of an isomorphism class. Formulae are taken up to
/// variable relabeling and sign flips, hypergraphs up to vertex relabeling.
struct IsoKey {
  std::string bytes;
  auto operator<=>(const IsoKey&) const = default;
  std::string hex() const;
};

struct IsoKeyHash {
  std::size_t operator()(const IsoKey& k) const {
    return std::hash<std::string>{}(k.bytes);
  }
};

struct CanonOptions {
  std::uint32_t max_order = 16;
  std::uint64_t node_budget = 20'000'000;
};

struct Canonical {
  IsoKey key;
  std::uint64_t automorphisms = 0;
};

/// Individualization-refinement search over the full relabeling group.
/// Throws BudgetExceeded above `max_order` or when the search tree exceeds
/// `node_budget` nodes.
Canonical canonicalize(const Formula& f, const CanonOptions& opts = {});
Canonical canonicalize(const Hypergraph& g, const CanonOptions& opts = {});

inline IsoKey canonical_key(const Formula& f, const CanonOptions& o = {}) {
  return canonicalize(f, o).key;
}
inline IsoKey canonical_key(const Hypergraph& g, const CanonOptions& o = {}) {
  return canonicalize(g, o).key;
}
inline std::uint64_t automorphism_count(const Formula& f,
                                        const CanonOptions& o = {}) {
  return canonicalize(f, o).automorphisms;
}
inline std::uint64_t automorphism_count(const Hypergraph& g,
                                        const CanonOptions& o = {}) {
  return canonicalize(g, o).automorphisms;
}

/// A copy of a template inside a host: the host variables it occupies and the
/// host clause (edge) indices it consists of, both sorted.
struct Copy {
  std::vector<Var> variables;
  std::vector<std::size_t> members;
  auto operator<=>(const Copy&) const = default;
};

/// Number of distinct subformulae of `host` isomorphic to `pattern`.
std::uint64_t count_copies(const Formula& pattern, const Formula& host,
                           const CanonOptions& opts = {});
std::uint64_t count_copies(const Hypergraph& pattern, const Hypergraph& host,
                           const CanonOptions& opts = {});

std::vector<Copy> enumerate_copies(const Formula& pattern, const Formula& host);
std::vector<Copy> enumerate_copies(const Hypergraph& pattern,
                                   const Hypergraph& host);

/// Signed relabeling: variable v goes to perm[v-1]; flip[v-1] negates it.
Formula relabel(const Formula& f, std::span<const Var> perm,
                const std::vector<bool>& flip);
Hypergraph relabel(const Hypergraph& g, std::span<const Var> perm);

/// Disjoint union; the second operand's labels are shifted past the first.
Formula disjoint_union(const Formula& a, const Formula& b);
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

// Named structures used throughout.
Formula complementary_pair(std::uint32_t r);   // (x1..xr), (-x1..-xr)
Formula complete_formula(std::uint32_t n, std::uint32_t r);
Hypergraph complete_hypergraph(std::uint32_t n, std::uint32_t r);

}  // namespace subcrit
