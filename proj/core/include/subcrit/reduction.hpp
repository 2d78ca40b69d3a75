#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "subcrit/instances.hpp"

namespace subcrit {

/// One application of the pure literal rule: `literal` is set True and the
/// listed clauses (indices into the input formula) are deleted. A variable
/// with no occurrences is removed by a step with no clauses.
struct PureLiteralStep {
  Literal literal = 0;
  std::vector<std::size_t> removed;
};

struct PureLiteralTrace {
  std::vector<PureLiteralStep> steps;
};

struct PureLiteralResult {
  Subformula core;                        // full, or empty with order 0
  std::vector<std::size_t> core_clauses;  // indices into the input
  PureLiteralTrace trace;
};

/// Sets all pure literals True in rounds until none remain.
PureLiteralResult pure_literal_core(const Formula& f);

/// Same reduction one literal at a time; `choose` picks an index into the
/// currently pure literals. Used to check that the core does not depend on
/// the selection order.
PureLiteralResult pure_literal_core_sequential(
    const Formula& f,
    const std::function<std::size_t(std::span<const Literal>)>& choose);

/// Extends an assignment of the core's (local) variables to all of `f` by
/// setting every trace literal True. Index v-1 holds variable v.
std::vector<bool> lift_assignment(const Formula& f, const PureLiteralResult& red,
                                  const std::vector<bool>& core_assignment);

struct PeelRound {
  std::vector<Var> vertices;            // degree <= k-1 at round start
  std::vector<std::size_t> removed;     // incident edges deleted this round
};

struct PeelTrace {
  std::vector<PeelRound> rounds;
};

struct KCoreResult {
  SubHypergraph core;
  std::vector<std::size_t> core_edges;
  PeelTrace trace;
};

/// Round-based peeling: each round deletes every vertex of degree < k.
KCoreResult k_core(const Hypergraph& g, std::uint32_t k);

/// Peels one minimum-degree vertex at a time; core vertices (parent labels).
std::vector<Var> k_core_sequential(const Hypergraph& g, std::uint32_t k);

}  // namespace subcrit
