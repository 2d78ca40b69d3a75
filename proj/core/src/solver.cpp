#include "subcrit/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "subcrit/errors.hpp"
#include "subcrit/exhaustive.hpp"
#include "subcrit/reduction.hpp"

namespace subcrit {

namespace {

bool satisfiable_via_core(const Formula& f, const SolverBudget& budget) {
  PureLiteralResult red = pure_literal_core(f);
  if (red.core_clauses.empty()) return true;
  return satisfiable_by_exhaustion(red.core.formula, budget.max_core_order);
}

void check_coloring_budget(std::uint32_t order, std::uint32_t k, const SolverBudget& budget) {
  const double work = std::pow(static_cast<double>(k), static_cast<double>(order));
  if (work > static_cast<double>(budget.max_colorings))
    throw BudgetExceeded("k-coloring search over " + std::to_string(order) +
                         " core vertices exceeds the budget");
}

bool colorable_via_core(const Hypergraph& g, std::uint32_t k, const SolverBudget& budget) {
  KCoreResult red = k_core(g, k);
  if (red.core_edges.empty()) return true;
  check_coloring_budget(red.core.graph.order(), k, budget);
  return least_coloring(red.core.graph, k).has_value();
}

Formula keep_clauses(const Formula& f, const std::vector<bool>& keep) {
  std::vector<Clause> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (keep[i]) out.push_back(f.clause(i));
  return Formula(f.order(), f.width(), std::move(out));
}

Hypergraph keep_edges(const Hypergraph& g, const std::vector<bool>& keep) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) out.push_back(g.edge(i));
  return Hypergraph(g.order(), g.width(), std::move(out));
}

std::vector<std::size_t> kept_indices(const std::vector<bool>& keep) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

}  // namespace

SatVerdict decide_sat(const Formula& f, const SolverBudget& budget) {
  PureLiteralResult red = pure_literal_core(f);
  const Formula& core = red.core.formula;
  SatVerdict v;
  v.core_order = core.order();
  if (core.order() > budget.max_core_order)
    throw BudgetExceeded("pure-literal core has " + std::to_string(core.order()) +
                         " variables, budget " + std::to_string(budget.max_core_order));
  AssignmentScan scan = best_assignment(core, budget.max_core_order);
  std::vector<bool> local = unpack_assignment(scan.assignment, core.order());
  v.assignment = lift_assignment(f, red, local);
  v.max_satisfied = (f.size() - red.core_clauses.size()) + scan.satisfied;
  if (count_satisfied(f, v.assignment) != v.max_satisfied)
    throw std::logic_error("lifted assignment does not reach the reported optimum");
  if (scan.satisfied == core.size()) {
    v.status = SatStatus::kSat;
    if (!satisfies(f, v.assignment)) throw std::logic_error("lifted assignment is not satisfying");
    return v;
  }
  v.status = SatStatus::kUnsat;
  Subformula local_muf = extract_muf(core, budget);
  for (Var& x : local_muf.variables) x = red.core.variables[x - 1];
  v.muf = std::move(local_muf);
  return v;
}

Subformula extract_muf(const Formula& f, const SolverBudget& budget) {
  if (satisfiable_via_core(f, budget))
    throw std::invalid_argument("cannot extract a MUF from a satisfiable formula");
  std::vector<bool> keep(f.size(), true);
  for (std::size_t i = 0; i < f.size(); ++i) {
    keep[i] = false;
    if (satisfiable_via_core(keep_clauses(f, keep), budget)) keep[i] = true;
  }
  return induced_by_clauses(f, kept_indices(keep));
}

ColorVerdict decide_colorable(const Hypergraph& g, std::uint32_t k, const SolverBudget& budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  KCoreResult red = k_core(g, k);
  const Hypergraph& core = red.core.graph;
  ColorVerdict v;
  v.core_order = core.order();
  std::vector<std::uint32_t> color(g.order() + 1, 0);
  if (!red.core_edges.empty()) {
    check_coloring_budget(core.order(), k, budget);
    auto local = least_coloring(core, k);
    if (!local) {
      v.colorable = false;
      SubHypergraph obs = extract_obstruction(core, k, budget);
      for (Var& x : obs.vertices) x = red.core.vertices[x - 1];
      v.obstruction = std::move(obs);
      return v;
    }
    for (std::size_t i = 0; i < local->size(); ++i) color[red.core.vertices[i]] = (*local)[i];
  }
  std::vector<std::vector<std::size_t>> inc(g.order() + 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (Var u : g.edge(i)) inc[u].push_back(i);
  for (auto round = red.trace.rounds.rbegin(); round != red.trace.rounds.rend(); ++round) {
    for (Var x : round->vertices) {
      std::vector<bool> banned(k + 1, false);
      for (std::size_t ei : inc[x]) {
        std::uint32_t shared = 0;
        bool complete = true;
        for (Var u : g.edge(ei)) {
          if (u == x) continue;
          if (color[u] == 0 || (shared != 0 && color[u] != shared)) {
            complete = false;
            break;
          }
          shared = color[u];
        }
        if (complete && shared != 0) banned[shared] = true;
      }
      std::uint32_t c = 1;
      while (c <= k && banned[c]) ++c;
      if (c > k) throw std::logic_error("no free color for a peeled vertex");
      color[x] = c;
    }
  }
  // Vertices of a core with no edges never enter a round (k = 0 excluded).
  for (Var x = 1; x <= g.order(); ++x)
    if (color[x] == 0) color[x] = 1;
  v.colorable = true;
  v.coloring.assign(color.begin() + 1, color.end());
  if (!is_proper_coloring(g, v.coloring, k))
    throw std::logic_error("extended coloring is not proper");
  return v;
}

SubHypergraph extract_obstruction(const Hypergraph& g, std::uint32_t k,
                                  const SolverBudget& budget) {
  if (colorable_via_core(g, k, budget))
    throw std::invalid_argument("cannot extract an obstruction from a colorable hypergraph");
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    keep[i] = false;
    if (colorable_via_core(keep_edges(g, keep), k, budget)) keep[i] = true;
  }
  return induced_by_edges(g, kept_indices(keep));
}

}  // namespace subcrit
