#include "subcrit/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace subcrit {

namespace {

double binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0.0;
  double out = 1.0;
  for (std::uint32_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Table of C(a, b) for a <= n, b <= r.
class BinomialTable {
 public:
  BinomialTable(std::uint32_t n, std::uint32_t r)
      : r_(r), table_((n + 1) * (r + 1), 0) {
    for (std::uint32_t a = 0; a <= n; ++a) {
      at(a, 0) = 1;
      for (std::uint32_t b = 1; b <= std::min(a, r); ++b)
        at(a, b) = (b == a) ? 1 : at(a - 1, b - 1) + at(a - 1, b);
    }
  }
  std::uint64_t operator()(std::uint32_t a, std::uint32_t b) const {
    return table_[a * (r_ + 1) + b];
  }

 private:
  std::uint64_t& at(std::uint32_t a, std::uint32_t b) { return table_[a * (r_ + 1) + b]; }
  std::uint32_t r_;
  std::vector<std::uint64_t> table_;
};

// r-subset of {1..n} with the given rank in lexicographic order.
std::vector<Var> unrank_subset(std::uint64_t rank, std::uint32_t n,
                               std::uint32_t r, const BinomialTable& binom) {
  std::vector<Var> out;
  out.reserve(r);
  Var v = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    while (true) {
      const std::uint64_t with_v = binom(n - v, r - i - 1);
      if (rank < with_v) break;
      rank -= with_v;
      ++v;
    }
    out.push_back(v);
    ++v;
  }
  return out;
}

bool next_subset(std::vector<Var>& combo, std::uint32_t n) {
  const auto r = static_cast<std::uint32_t>(combo.size());
  std::int64_t i = static_cast<std::int64_t>(r) - 1;
  while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - r + static_cast<Var>(i) + 1) --i;
  if (i < 0) return false;
  ++combo[static_cast<std::size_t>(i)];
  for (std::size_t j = static_cast<std::size_t>(i) + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

Clause make_clause(const std::vector<Var>& vars, std::uint32_t mask) {
  std::vector<Literal> lits;
  lits.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto v = static_cast<Literal>(vars[i]);
    lits.push_back((mask >> i) & 1u ? -v : v);
  }
  return Clause(std::move(lits));
}

// Geometric skipping: visits the indices of present candidates in
// increasing order.
template <typename Visit>
void skip_candidates(std::uint64_t total, double p, Seed seed, Visit&& visit) {
  if (p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < total; ++i) visit(i);
    return;
  }
  std::mt19937_64 rng(seed);
  const double log_q = std::log1p(-p);
  std::uint64_t next = 0;  // first index not yet decided
  while (true) {
    const double u = 1.0 - uniform01(rng);  // (0, 1]
    const double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(total - next)) return;
    const std::uint64_t index = next + static_cast<std::uint64_t>(gap);
    visit(index);
    next = index + 1;
    if (next >= total) return;
  }
}

}  // namespace

double ModelParams::candidates() const {
  const double subsets = binomial(n, r);
  return kind == ModelKind::kFormula ? std::ldexp(subsets, static_cast<int>(r)) : subsets;
}

ModelParams params_from_alpha(std::uint32_t n, std::uint32_t r, double alpha,
                              ModelKind kind) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
  ModelParams mp;
  mp.kind = kind;
  mp.n = n;
  mp.r = r;
  mp.alpha = alpha;
  mp.p = alpha * std::pow(static_cast<double>(n), -static_cast<double>(r - 1));
  if (mp.p > 1.0)
    throw std::invalid_argument("alpha n^{-(r-1)} = " + std::to_string(mp.p) +
                                " exceeds 1");
  mp.c = mp.p * mp.candidates() / n;
  return mp;
}

Seed derive_seed(Seed seed, std::uint64_t index) {
  // splitmix64 finalizer over a combination of the two words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Formula sample_formula(const ModelParams& params, Seed seed, SamplerMode mode) {
  const std::uint32_t n = params.n, r = params.r;
  const std::uint64_t signs = 1ull << r;
  std::vector<Clause> clauses;
  if (r > n) return Formula(n, r, {});
  if (mode == SamplerMode::kCoupled) {
    // Walk subsets and sign masks together instead of unranking each index.
    std::mt19937_64 rng(seed);
    std::vector<Var> combo(r);
    for (std::uint32_t i = 0; i < r; ++i) combo[i] = i + 1;
    do {
      for (std::uint32_t mask = 0; mask < signs; ++mask)
        if (uniform01(rng) < params.p) clauses.push_back(make_clause(combo, mask));
    } while (next_subset(combo, n));
    return Formula(n, r, std::move(clauses));
  }
  const BinomialTable binom(n, r);
  const std::uint64_t total = binom(n, r) * signs;
  skip_candidates(total, params.p, seed, [&](std::uint64_t idx) {
    clauses.push_back(make_clause(unrank_subset(idx / signs, n, r, binom),
                                  static_cast<std::uint32_t>(idx % signs)));
  });
  return Formula(n, r, std::move(clauses));
}

Hypergraph sample_hypergraph(const ModelParams& params, Seed seed,
                             SamplerMode mode) {
  const std::uint32_t n = params.n, r = params.r;
  std::vector<Edge> edges;
  if (r > n) return Hypergraph(n, r, {});
  if (mode == SamplerMode::kCoupled) {
    std::mt19937_64 rng(seed);
    std::vector<Var> combo(r);
    for (std::uint32_t i = 0; i < r; ++i) combo[i] = i + 1;
    do {
      if (uniform01(rng) < params.p) edges.push_back(combo);
    } while (next_subset(combo, n));
    return Hypergraph(n, r, std::move(edges));
  }
  const BinomialTable binom(n, r);
  skip_candidates(binom(n, r), params.p, seed, [&](std::uint64_t idx) {
    edges.push_back(unrank_subset(idx, n, r, binom));
  });
  return Hypergraph(n, r, std::move(edges));
}

double pure_literal_objective(std::uint32_t r, double y) {
  double fact = 1.0;
  for (std::uint32_t i = 2; i < r; ++i) fact *= i;
  const double base = -std::expm1(-y);  // 1 - e^{-y}
  return fact * y / (std::ldexp(1.0, static_cast<int>(r - 1)) *
                     std::pow(base, static_cast<double>(r - 1)));
}

Threshold pure_literal_threshold(std::uint32_t r) {
  if (r < 3) throw std::invalid_argument("pure literal threshold needs r >= 3");
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 1e-6, hi = 50.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = pure_literal_objective(r, x1), f2 = pure_literal_objective(r, x2);
  while (hi - lo > 1e-11) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = pure_literal_objective(r, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = pure_literal_objective(r, x2);
    }
  }
  const double y = 0.5 * (lo + hi);
  return {pure_literal_objective(r, y), y};
}

}  // namespace subcrit
