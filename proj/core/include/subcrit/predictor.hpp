#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subcrit/catalog.hpp"
#include "subcrit/instances.hpp"
#include "subcrit/rational.hpp"

namespace subcrit {

enum class EventKind {
  kPureLiteralFailure,  // "pl-fail": nonempty pure-literal core
  kKCore,               // "kcore": nonempty k-core
  kUnsat,               // "unsat"
  kNonColorable,        // "noncolorable": not k-colorable
};

std::string to_string(EventKind kind);
EventKind parse_event(const std::string& name);
inline bool is_formula_event(EventKind k) {
  return k == EventKind::kPureLiteralFailure || k == EventKind::kUnsat;
}
/// Catalog class whose copies make up the event.
EntryClass member_class(EventKind kind);

/// Expected number of copies of H in the random model on n variables (n
/// vertices) at density alpha. Zero when n < |H|.
double expected_copies_exact(const Formula& h, std::uint32_t n, double alpha);
double expected_copies_exact(const Hypergraph& h, std::uint32_t n, double alpha);
Rational expected_copies_exact(const Formula& h, std::uint32_t n, const Rational& alpha);
Rational expected_copies_exact(const Hypergraph& h, std::uint32_t n, const Rational& alpha);

/// coefficient * alpha^alpha_power * n^-exponent.
struct FirstOrderTerm {
  Rational coefficient;
  std::uint32_t alpha_power = 0;
  std::int64_t exponent = 0;

  double evaluate(double n, double alpha) const;
};

FirstOrderTerm first_order_containment(const Formula& h);
FirstOrderTerm first_order_containment(const Hypergraph& h, std::uint32_t k);

struct CoreTypeDistribution {
  std::vector<std::pair<IsoKey, Rational>> weights;  // sums to exactly 1
};

CoreTypeDistribution core_type_distribution(std::span<const FormulaEntry> entries,
                                            const Rational& alpha);
CoreTypeDistribution core_type_distribution(std::span<const HypergraphEntry> entries,
                                            const Rational& alpha);

/// Failure probability ~ sum_{s=1}^{s_max} p_s(alpha) n^{-s}.
struct ExpansionPolynomial {
  std::map<std::uint32_t, AlphaPolynomial> terms;  // every s in 1..s_max
  std::uint32_t s_max = 0;
  std::string validity;

  const AlphaPolynomial& term(std::uint32_t s) const { return terms.at(s); }
  double evaluate(double n, double alpha) const;
};

/// Inclusion-exclusion over configurations (unions of member copies), read
/// off the full / k-dense catalog. Throws IncompleteCatalog unless the
/// catalog is complete through s_max.
ExpansionPolynomial failure_expansion(const FormulaCatalog& catalog, EventKind event,
                                      std::uint32_t s_max);
ExpansionPolynomial failure_expansion(const HypergraphCatalog& catalog, EventKind event,
                                      std::uint32_t s_max);

/// Smallest excess of a member class in the catalog, or 0 if it has none.
std::uint32_t leading_excess(const FormulaCatalog& catalog, EventKind event);
std::uint32_t leading_excess(const HypergraphCatalog& catalog, EventKind event);

/// Upper bound on the probability of a full subformula on t variables.
double tail_bound(std::uint32_t r, double alpha, double n, double t);
/// Upper bound on the probability of a k-dense subhypergraph on t vertices.
double tail_bound_hypergraph(std::uint32_t r, std::uint32_t k, double alpha, double n,
                             double t);

}  // namespace subcrit
