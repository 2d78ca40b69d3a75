#include "subcrit/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcrit {

namespace {

class LiteralCounts {
 public:
  explicit LiteralCounts(const Formula& f)
      : f_(f),
        pos_(f.order() + 1, 0),
        neg_(f.order() + 1, 0),
        occ_(f.order() + 1),
        clause_alive_(f.size(), true),
        var_alive_(f.order() + 1, true) {
    for (std::size_t i = 0; i < f.size(); ++i)
      for (Literal l : f.clause(i).literals()) {
        ++(l > 0 ? pos_ : neg_)[var_of(l)];
        occ_[var_of(l)].push_back(i);
      }
  }

  std::vector<Literal> pure_literals() const {
    std::vector<Literal> out;
    for (Var v = 1; v <= f_.order(); ++v) {
      if (!var_alive_[v]) continue;
      if (neg_[v] == 0) out.push_back(static_cast<Literal>(v));
      else if (pos_[v] == 0) out.push_back(-static_cast<Literal>(v));
    }
    return out;
  }

  PureLiteralStep apply(Literal lit) {
    PureLiteralStep step{lit, {}};
    const Var v = var_of(lit);
    var_alive_[v] = false;
    for (std::size_t ci : occ_[v]) {
      if (!clause_alive_[ci] || !f_.clause(ci).contains(lit)) continue;
      clause_alive_[ci] = false;
      step.removed.push_back(ci);
      for (Literal l : f_.clause(ci).literals()) --(l > 0 ? pos_ : neg_)[var_of(l)];
    }
    return step;
  }

  PureLiteralResult finish(PureLiteralTrace trace) const {
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < f_.size(); ++i)
      if (clause_alive_[i]) alive.push_back(i);
    Subformula core = induced_by_clauses(f_, alive);
    return {std::move(core), std::move(alive), std::move(trace)};
  }

 private:
  const Formula& f_;
  std::vector<std::uint32_t> pos_, neg_;
  std::vector<std::vector<std::size_t>> occ_;
  std::vector<bool> clause_alive_;
  std::vector<bool> var_alive_;
};

}  // namespace

PureLiteralResult pure_literal_core(const Formula& f) {
  LiteralCounts counts(f);
  PureLiteralTrace trace;
  while (true) {
    const std::vector<Literal> pure = counts.pure_literals();
    if (pure.empty()) break;
    for (Literal lit : pure) trace.steps.push_back(counts.apply(lit));
  }
  return counts.finish(std::move(trace));
}

PureLiteralResult pure_literal_core_sequential(
    const Formula& f,
    const std::function<std::size_t(std::span<const Literal>)>& choose) {
  LiteralCounts counts(f);
  PureLiteralTrace trace;
  while (true) {
    const std::vector<Literal> pure = counts.pure_literals();
    if (pure.empty()) break;
    const std::size_t pick = choose(pure);
    if (pick >= pure.size()) throw std::out_of_range("pure literal choice");
    trace.steps.push_back(counts.apply(pure[pick]));
  }
  return counts.finish(std::move(trace));
}

std::vector<bool> lift_assignment(const Formula& f, const PureLiteralResult& red,
                                  const std::vector<bool>& core_assignment) {
  if (core_assignment.size() != red.core.variables.size())
    throw std::invalid_argument("core assignment has wrong length");
  std::vector<bool> out(f.order(), false);
  for (std::size_t i = 0; i < core_assignment.size(); ++i)
    out[red.core.variables[i] - 1] = core_assignment[i];
  for (const PureLiteralStep& s : red.trace.steps) out[var_of(s.literal) - 1] = s.literal > 0;
  return out;
}

KCoreResult k_core(const Hypergraph& g, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> deg = g.degrees();
  std::vector<std::vector<std::size_t>> inc(n + 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (Var v : g.edge(i)) inc[v].push_back(i);
  std::vector<bool> vertex_alive(n + 1, true), edge_alive(g.size(), true);
  PeelTrace trace;
  while (true) {
    PeelRound round;
    for (Var v = 1; v <= n; ++v)
      if (vertex_alive[v] && deg[v - 1] < k) round.vertices.push_back(v);
    if (round.vertices.empty()) break;
    for (Var v : round.vertices) vertex_alive[v] = false;
    for (Var v : round.vertices)
      for (std::size_t ei : inc[v]) {
        if (!edge_alive[ei]) continue;
        edge_alive[ei] = false;
        round.removed.push_back(ei);
        for (Var u : g.edge(ei)) --deg[u - 1];
      }
    trace.rounds.push_back(std::move(round));
  }
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (edge_alive[i]) alive.push_back(i);
  SubHypergraph core = induced_by_edges(g, alive);
  return {std::move(core), std::move(alive), std::move(trace)};
}

std::vector<Var> k_core_sequential(const Hypergraph& g, std::uint32_t k) {
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> deg = g.degrees();
  std::vector<bool> vertex_alive(n + 1, true), edge_alive(g.size(), true);
  std::vector<std::vector<std::size_t>> inc(n + 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (Var v : g.edge(i)) inc[v].push_back(i);
  while (true) {
    Var arg = 0;
    for (Var v = 1; v <= n; ++v)
      if (vertex_alive[v] && (arg == 0 || deg[v - 1] < deg[arg - 1])) arg = v;
    if (arg == 0 || deg[arg - 1] >= k) break;
    vertex_alive[arg] = false;
    for (std::size_t ei : inc[arg]) {
      if (!edge_alive[ei]) continue;
      edge_alive[ei] = false;
      for (Var u : g.edge(ei)) --deg[u - 1];
    }
  }
  std::vector<Var> core;
  for (Var v = 1; v <= n; ++v)
    if (vertex_alive[v]) core.push_back(v);
  return core;
}

}  // namespace subcrit
