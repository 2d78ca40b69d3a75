// subcrit: command-line front end to the core library.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "subcrit/catalog.hpp"
#include "subcrit/errors.hpp"
#include "subcrit/experiments.hpp"
#include "subcrit/io.hpp"
#include "subcrit/predictor.hpp"
#include "subcrit/reduction.hpp"
#include "subcrit/sampler.hpp"
#include "subcrit/solver.hpp"

using namespace subcrit;
using nlohmann::json;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitBudget = 30;

const std::map<std::string, bool> kKinds{{"sat", true}, {"hypergraph", false}};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

// Writes to `path`, or to standard output when it is empty.
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
  } else {
    std::ofstream out = open_out(path);
    write(out);
  }
}

void print_literals(const Subformula& s) {
  for (const Clause& c : s.parent_clauses()) {
    for (Literal l : c.literals()) std::cout << l << ' ';
    std::cout << "0\n";
  }
}

struct SampleOpts {
  bool sat = true;
  std::uint32_t n = 0, r = 3;
  double alpha = 0;
  Seed seed = 1;
  bool skip = false;
  std::string out;
};

int run_sample(const SampleOpts& o) {
  const ModelParams p =
      params_from_alpha(o.n, o.r, o.alpha, o.sat ? ModelKind::kFormula : ModelKind::kHypergraph);
  const SamplerMode mode = o.skip ? SamplerMode::kSkip : SamplerMode::kCoupled;
  emit(o.out, [&](std::ostream& out) {
    if (o.sat)
      write_dimacs(out, sample_formula(p, o.seed, mode));
    else
      write_edge_list(out, sample_hypergraph(p, o.seed, mode));
  });
  return 0;
}

int run_threshold(std::uint32_t r) {
  const Threshold t = pure_literal_threshold(r);
  std::printf("r %u\nalpha* %.12g\ny* %.12g\n", r, t.alpha, t.y);
  return 0;
}

struct CoreOpts {
  bool sat = true;
  std::uint32_t k = 3;
  std::string in;
};

int run_core(const CoreOpts& o) {
  if (o.sat) {
    const Formula f = read_dimacs_file(o.in);
    const PureLiteralResult red = pure_literal_core(f);
    const Formula& c = red.core.formula;
    std::cout << "c core order " << c.order() << " size " << c.size() << " excess "
              << (c.empty() ? 0 : excess(c)) << '\n';
    std::cout << "c variables";
    for (Var v : red.core.variables) std::cout << ' ' << v;
    std::cout << '\n';
    write_dimacs(std::cout, c);
  } else {
    const Hypergraph g = read_edge_list_file(o.in);
    const KCoreResult red = k_core(g, o.k);
    const Hypergraph& c = red.core.graph;
    std::cout << "# core order " << c.order() << " size " << c.size() << " excess "
              << (c.empty() ? 0 : excess(c)) << '\n';
    write_edge_list(std::cout, c);
  }
  return 0;
}

struct CatalogOpts {
  bool sat = true;
  std::uint32_t r = 3, k = 3;
  std::int64_t max_excess = 2;
  CatalogCaps caps;
  std::string out;
};

template <class Cat>
void summarize(const Cat& c) {
  std::cerr << c.entries.size() << " classes, complete " << (c.complete ? "yes" : "no")
            << ", order bound " << c.order_bound << '\n';
  for (const auto& e : c.entries)
    std::cerr << "  excess " << e.excess << " order " << e.order() << " size " << e.size()
              << " aut " << e.aut << (e.minimal ? " minimal" : "")
              << (e.obstruction ? " obstruction" : "") << '\n';
}

int run_catalog(const CatalogOpts& o) {
  if (o.sat) {
    const FormulaCatalog c = enumerate_full(o.r, o.max_excess, o.caps);
    emit(o.out, [&](std::ostream& out) { save_catalog(out, c); });
    summarize(c);
  } else {
    const HypergraphCatalog c = enumerate_k_dense(o.r, o.k, o.max_excess, o.caps);
    emit(o.out, [&](std::ostream& out) { save_catalog(out, c); });
    summarize(c);
  }
  return 0;
}

struct PredictOpts {
  std::string catalog;
  std::string event;
  std::uint32_t s_max = 1;
  std::optional<double> n, alpha;
  std::string json_out;
};

int run_predict(const PredictOpts& o) {
  const EventKind event = parse_event(o.event);
  std::string kind;
  {
    std::ifstream in = open_in(o.catalog);
    kind = catalog_kind(in);
  }
  std::ifstream in = open_in(o.catalog);
  const ExpansionPolynomial poly =
      kind == "sat" ? failure_expansion(load_formula_catalog(in), event, o.s_max)
                    : failure_expansion(load_hypergraph_catalog(in), event, o.s_max);
  json j;
  j["format_version"] = 1;
  j["event"] = to_string(event);
  j["s_max"] = poly.s_max;
  j["validity"] = poly.validity;
  json terms = json::array();
  for (const auto& [s, p] : poly.terms) {
    std::cout << "p_" << s << "(a) = " << p.to_string() << '\n';
    json coeffs = json::object();
    for (const auto& [power, q] : p.terms()) coeffs[std::to_string(power)] = to_string(q);
    terms.push_back({{"s", s}, {"polynomial", p.to_string()}, {"coefficients", coeffs}});
  }
  j["terms"] = terms;
  std::cout << "validity: " << poly.validity << '\n';
  if (o.n && o.alpha) {
    const double v = poly.evaluate(*o.n, *o.alpha);
    std::printf("P(n=%g, alpha=%g) ~ %.10g\n", *o.n, *o.alpha, v);
    j["evaluation"] = {{"n", *o.n}, {"alpha", *o.alpha}, {"value", v}};
  }
  if (!o.json_out.empty()) open_out(o.json_out) << j.dump(2) << '\n';
  return 0;
}

struct SolveOpts {
  std::string in;
  bool sat = true;
  std::uint32_t k = 3;
  SolverBudget budget;
  bool emit_muf = false;
};

int run_solve(const SolveOpts& o) {
  try {
    if (o.sat) {
      const Formula f = read_dimacs_file(o.in);
      SatVerdict v = decide_sat(f, o.budget);
      std::cout << "c core order " << v.core_order << " max satisfied " << v.max_satisfied
                << " of " << f.size() << '\n';
      std::cout << (v.status == SatStatus::kSat ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
      std::cout << 'v';
      for (Var x = 1; x <= f.order(); ++x)
        std::cout << ' ' << (v.assignment[x - 1] ? static_cast<Literal>(x) : -static_cast<Literal>(x));
      std::cout << " 0\n";
      if (o.emit_muf && v.muf) {
        std::cout << "c muf " << v.muf->formula.size() << " clauses\n";
        print_literals(*v.muf);
      }
      return v.status == SatStatus::kSat ? kExitSat : kExitUnsat;
    }
    const Hypergraph g = read_edge_list_file(o.in);
    ColorVerdict v = decide_colorable(g, o.k, o.budget);
    std::cout << "c core order " << v.core_order << '\n';
    if (v.colorable) {
      std::cout << "s COLORABLE\n";
      for (Var x = 1; x <= g.order(); ++x) std::cout << "v " << x << ' ' << v.coloring[x - 1] << '\n';
      return kExitSat;
    }
    std::cout << "s NON-COLORABLE\n";
    if (o.emit_muf && v.obstruction) {
      std::cout << "c obstruction " << v.obstruction->graph.size() << " edges\n";
      for (const Edge& e : v.obstruction->parent_edges()) {
        std::cout << 'e';
        for (Var x : e) std::cout << ' ' << x;
        std::cout << '\n';
      }
    }
    return kExitUnsat;
  } catch (const BudgetExceeded& e) {
    std::cout << "s UNKNOWN\nc " << e.what() << '\n';
    return kExitBudget;
  }
}

struct McOpts {
  ExperimentConfig config;
  std::string event = "pl-fail";
  std::string sampler = "skip";
  std::optional<std::int64_t> min_excess;
  std::optional<std::string> catalog;
  std::string json_out, csv_out;
};

int run_mc(const std::string& mode, McOpts o) {
  ExperimentConfig& c = o.config;
  c.kind = parse_event(o.event);
  c.sampler = o.sampler == "coupled" ? SamplerMode::kCoupled : SamplerMode::kSkip;
  c.catalog_path = o.catalog;
  c.census_min_excess = o.min_excess;
  const ExperimentReport r = mode == "rate"     ? run_failure_probability(c)
                             : mode == "census" ? run_core_census(c)
                                                : run_solver_validation(c);
  if (!o.json_out.empty()) {
    std::ofstream out = open_out(o.json_out);
    write_report_json(out, r);
  }
  if (!o.csv_out.empty()) {
    std::ofstream out = open_out(o.csv_out);
    write_report_csv(out, r);
  }
  std::printf("%s %s n=%u r=%u alpha=%g trials=%llu seed=%llu\n", r.mode.c_str(),
              to_string(c.kind).c_str(), c.n, c.r, c.alpha,
              static_cast<unsigned long long>(r.trials),
              static_cast<unsigned long long>(c.seed));
  std::printf("failures %llu  rate %.6g  wilson95 [%.6g, %.6g]\n",
              static_cast<unsigned long long>(r.failures), r.rate, r.wilson.lo, r.wilson.hi);
  if (mode == "validate") {
    std::printf("agree %llu  disagree %llu  witnesses %llu/%llu valid\n",
                static_cast<unsigned long long>(r.agree),
                static_cast<unsigned long long>(r.disagree),
                static_cast<unsigned long long>(r.witnesses_valid),
                static_cast<unsigned long long>(r.witnesses_checked));
  } else if (!std::isnan(r.predicted)) {
    std::printf("predicted %.6g (excess %u)  ratio %.4g  expected failures %.1f\n", r.predicted,
                r.leading_excess, r.ratio, r.predicted_failures);
  }
  if (r.budget_exceeded)
    std::printf("budget exceeded in %llu trials\n",
                static_cast<unsigned long long>(r.budget_exceeded));
  for (const CensusRow& row : r.census)
    std::printf("  %-20.20s order %2u size %2zu excess %2lld aut %6llu  count %8llu  "
                "solvable %llu/%llu  predicted %.4f\n",
                row.label.c_str(), row.order, row.size, static_cast<long long>(row.excess),
                static_cast<unsigned long long>(row.aut),
                static_cast<unsigned long long>(row.count),
                static_cast<unsigned long long>(row.solvable),
                static_cast<unsigned long long>(row.checked), row.predicted);
  if (mode == "census")
    std::printf("discarded %llu  tv distance %.4g  sanity %llu/%llu clean  %.2fs\n",
                static_cast<unsigned long long>(r.census_discarded), r.tv_distance,
                static_cast<unsigned long long>(r.sanity_checked - r.sanity_violations),
                static_cast<unsigned long long>(r.sanity_checked), r.seconds);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subcritical random SAT and hypergraph toolkit"};
  app.require_subcommand(1);
  int status = 0;

  SampleOpts so;
  auto* sample = app.add_subcommand("sample", "Draw a random formula or hypergraph");
  sample->add_option("--kind", so.sat)->transform(CLI::CheckedTransformer(kKinds))->required();
  sample->add_option("--n", so.n)->required();
  sample->add_option("--r", so.r)->required();
  sample->add_option("--alpha", so.alpha)->required();
  sample->add_option("--seed", so.seed);
  sample->add_flag("--skip", so.skip, "Geometric-skipping sampler");
  sample->add_option("--out", so.out);
  sample->callback([&] { status = run_sample(so); });

  std::uint32_t tr = 3;
  auto* threshold = app.add_subcommand("threshold", "Pure-literal threshold alpha* and y*");
  threshold->add_option("--r", tr)->required()->check(CLI::Range(2u, 64u));
  threshold->callback([&] { status = run_threshold(tr); });

  CoreOpts co;
  auto* core = app.add_subcommand("core", "Pure-literal core or k-core of an instance");
  core->add_option("--kind", co.sat)->transform(CLI::CheckedTransformer(kKinds))->required();
  core->add_option("--k", co.k);
  core->add_option("--in", co.in)->required()->check(CLI::ExistingFile);
  core->callback([&] { status = run_core(co); });

  CatalogOpts ca;
  auto* catalog = app.add_subcommand("catalog", "Enumerate full formulae or k-dense hypergraphs");
  catalog->add_option("--kind", ca.sat)->transform(CLI::CheckedTransformer(kKinds))->required();
  catalog->add_option("--r", ca.r)->required();
  catalog->add_option("--k", ca.k);
  catalog->add_option("--max-excess", ca.max_excess)->required();
  catalog->add_option("--order-cap", ca.caps.order_cap);
  catalog->add_option("--size-cap", ca.caps.size_cap);
  catalog->add_option("--node-budget", ca.caps.node_budget);
  catalog->add_option("--out", ca.out);
  catalog->callback([&] { status = run_catalog(ca); });

  PredictOpts po;
  auto* predict = app.add_subcommand("predict", "Failure-probability expansion from a catalog");
  predict->add_option("--catalog", po.catalog)->required()->check(CLI::ExistingFile);
  predict->add_option("--event", po.event)
      ->required()
      ->check(CLI::IsMember({"pl-fail", "kcore", "unsat", "noncolorable"}));
  predict->add_option("--smax", po.s_max)->required();
  predict->add_option("--n", po.n);
  predict->add_option("--alpha", po.alpha);
  predict->add_option("--json", po.json_out);
  predict->callback([&] { status = run_predict(po); });

  SolveOpts sv;
  auto* solve = app.add_subcommand("solve", "Decide satisfiability or k-colorability");
  solve->add_option("--in", sv.in)->required()->check(CLI::ExistingFile);
  solve->add_option("--kind", sv.sat)->transform(CLI::CheckedTransformer(kKinds));
  solve->add_option("--k", sv.k);
  solve->add_option("--budget", sv.budget.max_core_order, "Largest core order to exhaust");
  solve->add_option("--max-colorings", sv.budget.max_colorings);
  solve->add_flag("--emit-muf", sv.emit_muf, "Print a MUF or minimal obstruction");
  solve->callback([&] { status = run_solve(sv); });

  McOpts mo;
  std::string mode;
  auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
  mc->add_option("mode", mode)->required()->check(CLI::IsMember({"rate", "census", "validate"}));
  mc->add_option("--kind", mo.event)
      ->check(CLI::IsMember({"pl-fail", "kcore", "unsat", "noncolorable"}));
  mc->add_option("--n", mo.config.n)->required();
  mc->add_option("--r", mo.config.r)->required();
  mc->add_option("--k", mo.config.k);
  mc->add_option("--alpha", mo.config.alpha)->required();
  mc->add_option("--trials", mo.config.trials)->required();
  mc->add_option("--seed", mo.config.seed);
  mc->add_option("--workers", mo.config.workers);
  mc->add_option("--sampler", mo.sampler)->check(CLI::IsMember({"skip", "coupled"}));
  mc->add_option("--catalog", mo.catalog)->check(CLI::ExistingFile);
  mc->add_option("--catalog-max-excess", mo.config.catalog_max_excess);
  mc->add_option("--min-excess", mo.min_excess, "Census conditioning on lower-excess absence");
  mc->add_option("--budget", mo.config.budget.max_core_order);
  mc->add_option("--json", mo.json_out);
  mc->add_option("--csv", mo.csv_out);
  mc->callback([&] { status = run_mc(mode, mo); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "subcrit: " << e.what() << '\n';
    return 1;
  }
  return status;
}
