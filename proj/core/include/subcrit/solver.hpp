#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subcrit/instances.hpp"

namespace subcrit {

struct SolverBudget {
  std::uint32_t max_core_order = 28;       // 2^t assignments
  std::uint64_t max_colorings = 300'000'000;  // k^t colorings
};

enum class SatStatus { kSat, kUnsat };

struct SatVerdict {
  SatStatus status = SatStatus::kSat;
  /// A best assignment (index v-1 holds variable v): satisfying when SAT,
  /// otherwise one reaching max_satisfied.
  std::vector<bool> assignment;
  std::size_t max_satisfied = 0;
  std::optional<Subformula> muf;  // UNSAT only, labels of the input
  std::uint32_t core_order = 0;
};

/// Pure-literal reduction followed by exhaustion of the core. Throws
/// BudgetExceeded when the core is larger than the budget allows.
SatVerdict decide_sat(const Formula& f, const SolverBudget& budget = {});

/// Deletion-based minimization in clause order; throws std::invalid_argument
/// when `f` is satisfiable.
Subformula extract_muf(const Formula& f, const SolverBudget& budget = {});

struct ColorVerdict {
  bool colorable = false;
  std::vector<std::uint32_t> coloring;        // colors 1..k, index v-1
  std::optional<SubHypergraph> obstruction;   // non-colorable only
  std::uint32_t core_order = 0;
};

/// k-core reduction, then lexicographic search over colorings of the core;
/// peeled vertices are colored in reverse peel order.
ColorVerdict decide_colorable(const Hypergraph& g, std::uint32_t k,
                              const SolverBudget& budget = {});

/// Edge-deletion minimization of a non-k-colorable hypergraph.
SubHypergraph extract_obstruction(const Hypergraph& g, std::uint32_t k,
                                  const SolverBudget& budget = {});

}  // namespace subcrit
