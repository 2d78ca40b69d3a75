#include "subcrit/exhaustive.hpp"

#include <bit>
#include <functional>

#include "subcrit/errors.hpp"

namespace subcrit {

namespace {

void check_order(const Formula& f, std::uint32_t max_order) {
  if (f.order() > max_order || f.order() > 62)
    throw BudgetExceeded("exhaustive search over " + std::to_string(f.order()) +
                         " variables exceeds cap " + std::to_string(max_order));
}

// Reverses the low `t` bits so that variable 1 becomes most significant.
std::uint64_t lex_key(std::uint64_t bits, std::uint32_t t) {
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < t; ++i)
    if ((bits >> i) & 1u) out |= 1ull << (t - 1 - i);
  return out;
}

class GrayScan {
 public:
  explicit GrayScan(const Formula& f) : f_(f), occ_(f.order()), true_count_(f.size(), 0) {
    for (std::size_t i = 0; i < f.size(); ++i)
      for (Literal l : f.clause(i).literals()) {
        occ_[var_of(l) - 1].push_back({i, l > 0});
        if (l < 0) ++true_count_[i];  // all variables start False
      }
    for (std::uint32_t c : true_count_)
      if (c == 0) ++unsat_;
  }

  std::size_t unsatisfied() const { return unsat_; }
  std::uint64_t bits() const { return bits_; }

  void flip(std::uint32_t var_index) {
    bits_ ^= 1ull << var_index;
    const bool now_true = (bits_ >> var_index) & 1u;
    for (const auto& [ci, positive] : occ_[var_index]) {
      if (positive == now_true) {
        if (true_count_[ci]++ == 0) --unsat_;
      } else {
        if (--true_count_[ci] == 0) ++unsat_;
      }
    }
  }

 private:
  struct Occ {
    std::size_t clause;
    bool positive;
  };
  const Formula& f_;
  std::vector<std::vector<Occ>> occ_;
  std::vector<std::uint32_t> true_count_;
  std::size_t unsat_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace

AssignmentScan best_assignment(const Formula& f, std::uint32_t max_order) {
  check_order(f, max_order);
  const std::uint32_t t = f.order();
  GrayScan scan(f);
  AssignmentScan best{0, f.size() - scan.unsatisfied()};
  std::uint64_t best_key = 0;
  const std::uint64_t total = 1ull << t;
  for (std::uint64_t i = 1; i < total; ++i) {
    scan.flip(static_cast<std::uint32_t>(std::countr_zero(i)));
    const std::size_t sat = f.size() - scan.unsatisfied();
    if (sat < best.satisfied) continue;
    const std::uint64_t key = lex_key(scan.bits(), t);
    if (sat > best.satisfied || key < best_key) {
      best = {scan.bits(), sat};
      best_key = key;
    }
  }
  return best;
}

bool satisfiable_by_exhaustion(const Formula& f, std::uint32_t max_order) {
  check_order(f, max_order);
  GrayScan scan(f);
  if (scan.unsatisfied() == 0) return true;
  const std::uint64_t total = 1ull << f.order();
  for (std::uint64_t i = 1; i < total; ++i) {
    scan.flip(static_cast<std::uint32_t>(std::countr_zero(i)));
    if (scan.unsatisfied() == 0) return true;
  }
  return false;
}

std::optional<std::vector<std::uint32_t>> least_coloring(const Hypergraph& g,
                                                         std::uint32_t k) {
  const std::uint32_t t = g.order();
  // Edges checked when their largest vertex receives a color.
  std::vector<std::vector<std::size_t>> closing(t + 1);
  for (std::size_t i = 0; i < g.size(); ++i) closing[g.edge(i).back()].push_back(i);
  std::vector<std::uint32_t> color(t + 1, 0);
  std::function<bool(Var)> dfs = [&](Var v) -> bool {
    if (v > t) return true;
    for (std::uint32_t c = 1; c <= k; ++c) {
      color[v] = c;
      bool ok = true;
      for (std::size_t ei : closing[v]) {
        const Edge& e = g.edge(ei);
        bool mono = true;
        for (Var u : e)
          if (color[u] != c) { mono = false; break; }
        if (mono) { ok = false; break; }
      }
      if (ok && dfs(v + 1)) return true;
    }
    color[v] = 0;
    return false;
  };
  if (!dfs(1)) return std::nullopt;
  return std::vector<std::uint32_t>(color.begin() + 1, color.end());
}

std::vector<bool> unpack_assignment(std::uint64_t bits, std::uint32_t order) {
  std::vector<bool> out(order);
  for (std::uint32_t i = 0; i < order; ++i) out[i] = (bits >> i) & 1u;
  return out;
}

std::size_t count_satisfied(const Formula& f, const std::vector<bool>& assignment) {
  std::size_t sat = 0;
  for (const Clause& c : f.clauses())
    for (Literal l : c.literals())
      if (assignment[var_of(l) - 1] == (l > 0)) {
        ++sat;
        break;
      }
  return sat;
}

bool satisfies(const Formula& f, const std::vector<bool>& assignment) {
  return assignment.size() == f.order() && count_satisfied(f, assignment) == f.size();
}

bool is_proper_coloring(const Hypergraph& g, const std::vector<std::uint32_t>& colors,
                        std::uint32_t k) {
  if (colors.size() != g.order()) return false;
  for (std::uint32_t c : colors)
    if (c < 1 || c > k) return false;
  for (const Edge& e : g.edges()) {
    bool mono = true;
    for (Var u : e)
      if (colors[u - 1] != colors[e.front() - 1]) { mono = false; break; }
    if (mono) return false;
  }
  return true;
}

}  // namespace subcrit
