#include "subcrit/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "subcrit/errors.hpp"
#include "subcrit/exhaustive.hpp"
#include "subcrit/reduction.hpp"

namespace subcrit {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Accumulator {
  std::uint64_t failures = 0;
  std::uint64_t budget_exceeded = 0;
  std::uint64_t discarded = 0;
  std::uint64_t sanity_checked = 0;
  std::uint64_t sanity_violations = 0;
  std::uint64_t agree = 0;
  std::uint64_t disagree = 0;
  std::uint64_t witnesses_checked = 0;
  std::uint64_t witnesses_valid = 0;
  std::map<std::string, CensusRow> rows;

  void merge(const Accumulator& o) {
    failures += o.failures;
    budget_exceeded += o.budget_exceeded;
    discarded += o.discarded;
    sanity_checked += o.sanity_checked;
    sanity_violations += o.sanity_violations;
    agree += o.agree;
    disagree += o.disagree;
    witnesses_checked += o.witnesses_checked;
    witnesses_valid += o.witnesses_valid;
    for (const auto& [label, row] : o.rows) {
      auto [it, inserted] = rows.try_emplace(label, row);
      if (!inserted) {
        it->second.count += row.count;
        it->second.checked += row.checked;
        it->second.solvable += row.solvable;
      }
    }
  }
};

// Runs trial(i, acc) for every i < trials on `workers` threads. Each worker
// owns an accumulator; merging sums counts, so the result does not depend on
// the worker count.
template <class Trial>
Accumulator run_trials(std::uint64_t trials, unsigned workers, const Trial& trial) {
  workers = std::max(1u, workers);
  std::vector<Accumulator> accs(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](unsigned w) {
    try {
      for (std::uint64_t i = w; i < trials; i += workers) trial(i, accs[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Accumulator total;
  for (const auto& a : accs) total.merge(a);
  return total;
}

Rational exact_alpha(double alpha) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, alpha);
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

void validate(const ExperimentConfig& c) {
  if (c.n == 0) throw std::invalid_argument("n must be positive");
  if (c.alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  if (!is_formula_event(c.kind) && c.k < 2)
    throw std::invalid_argument("hypergraph events need k >= 2");
}

ModelParams model_of(const ExperimentConfig& c) {
  return params_from_alpha(c.n, c.r, c.alpha,
                           is_formula_event(c.kind) ? ModelKind::kFormula : ModelKind::kHypergraph);
}

template <class Cat>
Cat load_or_build(const ExperimentConfig& c);

template <>
FormulaCatalog load_or_build<FormulaCatalog>(const ExperimentConfig& c) {
  if (c.catalog_path) {
    std::ifstream in(*c.catalog_path);
    if (!in) throw std::runtime_error("cannot open catalog " + *c.catalog_path);
    FormulaCatalog cat = load_formula_catalog(in);
    if (cat.r != c.r) throw std::invalid_argument("catalog r does not match the experiment");
    return cat;
  }
  return enumerate_full(c.r, c.catalog_max_excess);
}

template <>
HypergraphCatalog load_or_build<HypergraphCatalog>(const ExperimentConfig& c) {
  if (c.catalog_path) {
    std::ifstream in(*c.catalog_path);
    if (!in) throw std::runtime_error("cannot open catalog " + *c.catalog_path);
    HypergraphCatalog cat = load_hypergraph_catalog(in);
    if (cat.r != c.r || cat.k != c.k)
      throw std::invalid_argument("catalog r/k does not match the experiment");
    return cat;
  }
  return enumerate_k_dense(c.r, c.k, c.catalog_max_excess);
}

template <class Cat>
void fill_prediction(const ExperimentConfig& c, const Cat& cat, ExperimentReport& rep) {
  rep.leading_excess = leading_excess(cat, c.kind);
  rep.predicted = kNaN;
  if (rep.leading_excess == 0 || !cat.complete ||
      static_cast<std::int64_t>(rep.leading_excess) > cat.max_excess)
    return;
  ExpansionPolynomial poly = failure_expansion(cat, c.kind, rep.leading_excess);
  rep.predicted = poly.term(rep.leading_excess).evaluate(c.alpha) *
                  std::pow(static_cast<double>(c.n), -static_cast<double>(rep.leading_excess));
}

template <class Cat, class Entry>
void fill_predicted_census(const ExperimentConfig& c, const Cat& cat, ExperimentReport& rep,
                           std::map<std::string, CensusRow>& rows) {
  if (rep.leading_excess == 0 || c.alpha <= 0) return;
  std::vector<Entry> level;
  for (const Entry& e : cat.entries)
    if (e.excess == rep.leading_excess && in_class(e, member_class(c.kind))) level.push_back(e);
  CoreTypeDistribution dist = core_type_distribution(std::span<const Entry>(level), exact_alpha(c.alpha));
  for (std::size_t i = 0; i < level.size(); ++i) {
    auto [it, inserted] = rows.try_emplace(level[i].key.hex());
    CensusRow& row = it->second;
    if (inserted) {
      row.label = level[i].key.hex();
      row.order = level[i].order();
      row.size = level[i].size();
      row.excess = level[i].excess;
      row.aut = level[i].aut;
    }
    row.predicted = to_double(dist.weights[i].second);
  }
}

template <class Cat, class S>
std::string classify(const Cat& cat, const S& obj, CensusRow& meta) {
  CanonOptions opts;
  opts.max_order = std::max<std::uint32_t>(opts.max_order, cat.caps.order_cap);
  meta.order = obj.order();
  meta.size = obj.size();
  meta.excess = excess(obj);
  if (obj.order() > cat.caps.order_cap) return "large-core";
  Canonical canon = canonicalize(obj, opts);
  const auto* entry = cat.find(canon.key);
  if (!entry) return "other";
  meta.aut = canon.automorphisms;
  return canon.key.hex();
}

template <class Cat, class S>
bool contains_lower(const Cat& cat, const S& obj, EventKind kind, std::int64_t bound) {
  for (const auto& e : cat.entries) {
    if (e.excess >= bound) break;
    if (in_class(e, member_class(kind)) && count_copies(e.structure, obj) > 0) return true;
  }
  return false;
}

template <class Cat, class S>
void record(const ExperimentConfig& c, const Cat& cat, const S& obj, bool census,
            std::optional<bool> solvable, Accumulator& acc) {
  if (!census) return;
  if (c.census_min_excess && contains_lower(cat, obj, c.kind, *c.census_min_excess)) {
    ++acc.discarded;
    return;
  }
  CensusRow meta;
  std::string label = classify(cat, obj, meta);
  auto [it, inserted] = acc.rows.try_emplace(label, meta);
  CensusRow& row = it->second;
  if (inserted) {
    row.label = label;
    if (label == "other" || label == "large-core") row = CensusRow{label};
  }
  ++row.count;
  if (solvable) {
    ++row.checked;
    if (*solvable) ++row.solvable;
  }
}

ExperimentReport finish(const ExperimentConfig& c, const std::string& mode, Accumulator& acc,
                        std::chrono::steady_clock::time_point start) {
  ExperimentReport rep;
  rep.mode = mode;
  rep.config = c;
  rep.trials = c.trials;
  rep.failures = acc.failures;
  rep.budget_exceeded = acc.budget_exceeded;
  rep.rate = c.trials ? static_cast<double>(acc.failures) / static_cast<double>(c.trials) : 0.0;
  rep.wilson = wilson_interval(acc.failures, c.trials);
  rep.census_discarded = acc.discarded;
  rep.sanity_checked = acc.sanity_checked;
  rep.sanity_violations = acc.sanity_violations;
  rep.agree = acc.agree;
  rep.disagree = acc.disagree;
  rep.witnesses_checked = acc.witnesses_checked;
  rep.witnesses_valid = acc.witnesses_valid;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void finish_census(ExperimentReport& rep, std::map<std::string, CensusRow>& rows) {
  const std::uint64_t classified = rep.failures - rep.census_discarded;
  double tv = 0.0;
  for (auto& [label, row] : rows) {
    const double emp = classified ? static_cast<double>(row.count) / classified : 0.0;
    tv += std::abs(emp - row.predicted);
    rep.census.push_back(row);
  }
  rep.tv_distance = classified ? tv / 2 : kNaN;
  std::sort(rep.census.begin(), rep.census.end(), [](const CensusRow& a, const CensusRow& b) {
    return std::tie(b.count, a.label) < std::tie(a.count, b.label);
  });
}

ExperimentReport run_events(const ExperimentConfig& c, bool census) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  const ModelParams params = model_of(c);
  const std::string mode = census ? "census" : "rate";
  if (is_formula_event(c.kind)) {
    const FormulaCatalog cat = load_or_build<FormulaCatalog>(c);
    Accumulator acc = run_trials(c.trials, c.workers, [&](std::uint64_t i, Accumulator& a) {
      const Formula f = sample_formula(params, derive_seed(c.seed, i), c.sampler);
      const PureLiteralResult red = pure_literal_core(f);
      if (red.core_clauses.empty()) return;
      if (i % 100 == 0) {
        ++a.sanity_checked;
        if (!is_full(red.core.formula)) ++a.sanity_violations;
      }
      if (c.kind == EventKind::kPureLiteralFailure) {
        ++a.failures;
        std::optional<bool> sat;
        if (census && red.core.formula.order() <= 20)
          sat = satisfiable_by_exhaustion(red.core.formula, 20);
        record(c, cat, red.core.formula, census, sat, a);
        return;
      }
      try {
        SatVerdict v = decide_sat(f, c.budget);
        if (v.status == SatStatus::kSat) return;
        ++a.failures;
        record(c, cat, v.muf->formula, census, std::optional<bool>(false), a);
      } catch (const BudgetExceeded&) {
        ++a.budget_exceeded;
      }
    });
    ExperimentReport rep = finish(c, mode, acc, start);
    fill_prediction(c, cat, rep);
    if (census) {
      fill_predicted_census<FormulaCatalog, FormulaEntry>(c, cat, rep, acc.rows);
      finish_census(rep, acc.rows);
    }
    rep.predicted_failures = rep.predicted * static_cast<double>(c.trials);
    rep.ratio = rep.rate / rep.predicted;
    return rep;
  }
  const HypergraphCatalog cat = load_or_build<HypergraphCatalog>(c);
  Accumulator acc = run_trials(c.trials, c.workers, [&](std::uint64_t i, Accumulator& a) {
    const Hypergraph g = sample_hypergraph(params, derive_seed(c.seed, i), c.sampler);
    const KCoreResult red = k_core(g, c.k);
    if (red.core_edges.empty()) return;
    if (i % 100 == 0) {
      ++a.sanity_checked;
      if (!is_k_dense(red.core.graph, c.k)) ++a.sanity_violations;
    }
    if (c.kind == EventKind::kKCore) {
      ++a.failures;
      std::optional<bool> col;
      if (census && red.core.graph.order() <= kColoringOrderCap)
        col = least_coloring(red.core.graph, c.k).has_value();
      record(c, cat, red.core.graph, census, col, a);
      return;
    }
    try {
      ColorVerdict v = decide_colorable(g, c.k, c.budget);
      if (v.colorable) return;
      ++a.failures;
      record(c, cat, v.obstruction->graph, census, std::optional<bool>(false), a);
    } catch (const BudgetExceeded&) {
      ++a.budget_exceeded;
    }
  });
  ExperimentReport rep = finish(c, mode, acc, start);
  fill_prediction(c, cat, rep);
  if (census) {
    fill_predicted_census<HypergraphCatalog, HypergraphEntry>(c, cat, rep, acc.rows);
    finish_census(rep, acc.rows);
  }
  rep.predicted_failures = rep.predicted * static_cast<double>(c.trials);
  rep.ratio = rep.rate / rep.predicted;
  return rep;
}

bool clauses_within(const Subformula& sub, const Formula& f) {
  for (const Clause& c : sub.parent_clauses())
    if (!f.contains(c)) return false;
  return true;
}

bool edges_within(const SubHypergraph& sub, const Hypergraph& g) {
  for (const Edge& e : sub.parent_edges())
    if (!g.contains(e)) return false;
  return true;
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {successes == 0 ? 0.0 : std::max(0.0, center - half),
          successes == trials ? 1.0 : std::min(1.0, center + half)};
}

const CensusRow* ExperimentReport::row(const std::string& label) const {
  for (const CensusRow& r : census)
    if (r.label == label) return &r;
  return nullptr;
}

ExperimentReport run_failure_probability(const ExperimentConfig& config) {
  return run_events(config, false);
}

ExperimentReport run_core_census(const ExperimentConfig& config) {
  return run_events(config, true);
}

std::size_t max_sat_oracle(const Formula& f) {
  const std::uint32_t n = f.order();
  if (n > 24) throw BudgetExceeded("MaxSAT oracle is limited to 24 variables");
  std::vector<std::uint16_t> falsified(std::size_t{1} << n, 0);
  const std::uint32_t all = (1u << n) - 1;
  for (const Clause& c : f.clauses()) {
    std::uint32_t fixed = 0, value = 0;
    for (Literal l : c.literals()) {
      fixed |= 1u << (var_of(l) - 1);
      if (l < 0) value |= 1u << (var_of(l) - 1);
    }
    const std::uint32_t free = all & ~fixed;
    std::uint32_t sub = free;
    while (true) {
      ++falsified[value | sub];
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  const std::uint16_t best = *std::min_element(falsified.begin(), falsified.end());
  return f.size() - best;
}

bool colorable_oracle(const Hypergraph& g, std::uint32_t k) {
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> color(n + 1, 0);
  auto edge_ok = [&](const Edge& e) {
    for (Var u : e)
      if (color[u] == 0 || color[u] != color[e[0]]) return true;
    return false;
  };
  auto rec = [&](auto&& self, Var v) -> bool {
    if (v > n) return true;
    for (std::uint32_t c = 1; c <= k; ++c) {
      color[v] = c;
      bool ok = true;
      for (const Edge& e : g.edges())
        if (std::find(e.begin(), e.end(), v) != e.end() && !edge_ok(e)) {
          ok = false;
          break;
        }
      if (ok && self(self, v + 1)) return true;
    }
    color[v] = 0;
    return false;
  };
  return rec(rec, 1);
}

ExperimentReport run_solver_validation(const ExperimentConfig& c) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  const ModelParams params = model_of(c);
  Accumulator acc;
  if (is_formula_event(c.kind)) {
    if (c.n > 18) throw std::invalid_argument("SAT validation oracle is limited to n <= 18");
    acc = run_trials(c.trials, c.workers, [&](std::uint64_t i, Accumulator& a) {
      const Formula f = sample_formula(params, derive_seed(c.seed, i), c.sampler);
      const std::size_t oracle = max_sat_oracle(f);
      try {
        const SatVerdict v = decide_sat(f, c.budget);
        const bool status_ok = (v.status == SatStatus::kSat) == (oracle == f.size());
        const bool value_ok = v.max_satisfied == oracle && count_satisfied(f, v.assignment) == oracle;
        if (status_ok && value_ok) ++a.agree; else ++a.disagree;
        if (v.status == SatStatus::kUnsat) {
          ++a.failures;
          ++a.witnesses_checked;
          if (v.muf && is_muf(v.muf->formula) && clauses_within(*v.muf, f)) ++a.witnesses_valid;
        }
      } catch (const BudgetExceeded&) {
        ++a.budget_exceeded;
        ++a.disagree;
      }
    });
  } else {
    if (c.n > 13) throw std::invalid_argument("coloring validation oracle is limited to n <= 13");
    acc = run_trials(c.trials, c.workers, [&](std::uint64_t i, Accumulator& a) {
      const Hypergraph g = sample_hypergraph(params, derive_seed(c.seed, i), c.sampler);
      const bool oracle = colorable_oracle(g, c.k);
      try {
        const ColorVerdict v = decide_colorable(g, c.k, c.budget);
        if (v.colorable == oracle) ++a.agree; else ++a.disagree;
        ++a.witnesses_checked;
        if (v.colorable) {
          if (is_proper_coloring(g, v.coloring, c.k)) ++a.witnesses_valid;
        } else {
          ++a.failures;
          if (v.obstruction && is_min_non_k_colorable(v.obstruction->graph, c.k) &&
              edges_within(*v.obstruction, g))
            ++a.witnesses_valid;
        }
      } catch (const BudgetExceeded&) {
        ++a.budget_exceeded;
        ++a.disagree;
      }
    });
  }
  ExperimentReport rep = finish(c, "validate", acc, start);
  rep.predicted = kNaN;
  rep.predicted_failures = kNaN;
  rep.ratio = kNaN;
  rep.tv_distance = kNaN;
  return rep;
}

namespace {

json config_json(const ExperimentConfig& c) {
  json j = {{"kind", to_string(c.kind)}, {"n", c.n},           {"r", c.r},
            {"k", c.k},                  {"alpha", c.alpha},   {"trials", c.trials},
            {"seed", c.seed},            {"workers", c.workers},
            {"sampler", c.sampler == SamplerMode::kSkip ? "skip" : "coupled"},
            {"core_budget", c.budget.max_core_order},
            {"coloring_budget", c.budget.max_colorings}};
  j["catalog"] = c.catalog_path ? json(*c.catalog_path) : json(nullptr);
  j["census_min_excess"] = c.census_min_excess ? json(*c.census_min_excess) : json(nullptr);
  return j;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

void write_report_json(std::ostream& out, const ExperimentReport& r) {
  json j = {{"format_version", kReportFormatVersion},
            {"mode", r.mode},
            {"config", config_json(r.config)},
            {"trials", r.trials},
            {"failures", r.failures},
            {"budget_exceeded", r.budget_exceeded},
            {"rate", r.rate},
            {"wilson95", {r.wilson.lo, r.wilson.hi}},
            {"leading_excess", r.leading_excess},
            {"predicted", number(r.predicted)},
            {"predicted_failures", number(r.predicted_failures)},
            {"ratio", number(r.ratio)},
            {"seconds", r.seconds}};
  if (r.mode == "census") {
    json rows = json::array();
    for (const CensusRow& row : r.census)
      rows.push_back({{"label", row.label},     {"order", row.order},
                      {"size", row.size},       {"excess", row.excess},
                      {"aut", row.aut},         {"count", row.count},
                      {"checked", row.checked}, {"solvable", row.solvable},
                      {"predicted", row.predicted}});
    j["census"] = std::move(rows);
    j["census_discarded"] = r.census_discarded;
    j["tv_distance"] = number(r.tv_distance);
    j["sanity_checked"] = r.sanity_checked;
    j["sanity_violations"] = r.sanity_violations;
  }
  if (r.mode == "validate") {
    j["agree"] = r.agree;
    j["disagree"] = r.disagree;
    j["witnesses_checked"] = r.witnesses_checked;
    j["witnesses_valid"] = r.witnesses_valid;
  }
  out << j.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const ExperimentReport& r) {
  const ExperimentConfig& c = r.config;
  const std::string prefix = r.mode + "," + to_string(c.kind) + "," + std::to_string(c.n) + "," +
                             std::to_string(c.r) + "," + std::to_string(c.k) + "," +
                             json(c.alpha).dump() + "," + std::to_string(c.trials) + "," +
                             std::to_string(c.seed) + ",";
  auto line = [&](const std::string& stat, const json& value) {
    out << prefix << stat << "," << (value.is_null() ? std::string() : value.dump()) << '\n';
  };
  out << "mode,kind,n,r,k,alpha,trials,seed,statistic,value\n";
  line("failures", r.failures);
  line("budget_exceeded", r.budget_exceeded);
  line("rate", r.rate);
  line("wilson95_lo", r.wilson.lo);
  line("wilson95_hi", r.wilson.hi);
  line("predicted", number(r.predicted));
  line("ratio", number(r.ratio));
  if (r.mode == "census") {
    for (const CensusRow& row : r.census) {
      line("census_count:" + row.label, row.count);
      line("census_predicted:" + row.label, row.predicted);
    }
    line("tv_distance", number(r.tv_distance));
  }
  if (r.mode == "validate") {
    line("agree", r.agree);
    line("disagree", r.disagree);
    line("witnesses_valid", r.witnesses_valid);
  }
  line("seconds", r.seconds);
}

}  // namespace subcrit
