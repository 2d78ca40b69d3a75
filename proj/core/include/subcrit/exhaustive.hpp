#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subcrit/instances.hpp"

namespace subcrit {

/// Result of scanning all 2^t assignments of a formula. Bit i of
/// `assignment` is the value of variable i+1.
struct AssignmentScan {
  std::uint64_t assignment = 0;
  std::size_t satisfied = 0;  // clauses satisfied by `assignment`
};

/// Gray-code scan of every assignment; returns the lexicographically least
/// (x1 first, False < True) assignment among those satisfying the most
/// clauses. Throws BudgetExceeded when order > max_order.
AssignmentScan best_assignment(const Formula& f, std::uint32_t max_order);

/// Early-exit exhaustive satisfiability test.
bool satisfiable_by_exhaustion(const Formula& f, std::uint32_t max_order);

/// Lexicographically least proper k-coloring (no monochromatic edge), colors
/// 1..k indexed by vertex-1, found by depth-first search in lex order.
std::optional<std::vector<std::uint32_t>> least_coloring(const Hypergraph& g,
                                                         std::uint32_t k);

std::vector<bool> unpack_assignment(std::uint64_t bits, std::uint32_t order);
bool satisfies(const Formula& f, const std::vector<bool>& assignment);
std::size_t count_satisfied(const Formula& f, const std::vector<bool>& assignment);
bool is_proper_coloring(const Hypergraph& g, const std::vector<std::uint32_t>& colors,
                        std::uint32_t k);

}  // namespace subcrit
