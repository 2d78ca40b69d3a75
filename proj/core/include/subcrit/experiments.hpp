#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subcrit/catalog.hpp"
#include "subcrit/predictor.hpp"
#include "subcrit/sampler.hpp"
#include "subcrit/solver.hpp"

namespace subcrit {

struct ExperimentConfig {
  EventKind kind = EventKind::kPureLiteralFailure;
  std::uint32_t n = 0;
  std::uint32_t r = 3;
  std::uint32_t k = 0;  // hypergraph events
  double alpha = 0.0;
  std::uint64_t trials = 0;
  Seed seed = 1;
  unsigned workers = 1;
  SolverBudget budget;
  SamplerMode sampler = SamplerMode::kSkip;
  std::optional<std::string> catalog_path;
  /// Excess bound of the catalog built when no path is given.
  std::int64_t catalog_max_excess = 2;
  /// Census conditioning: drop failing trials whose core contains a member
  /// class entry of lower excess.
  std::optional<std::int64_t> census_min_excess;
};

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

inline constexpr double kZ95 = 1.959963984540054;

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

struct CensusRow {
  std::string label;  // key hex, "other" or "large-core"
  std::uint32_t order = 0;
  std::size_t size = 0;
  std::int64_t excess = 0;
  std::uint64_t aut = 0;
  std::uint64_t count = 0;
  std::uint64_t checked = 0;   // cores solved by brute force
  std::uint64_t solvable = 0;  // of those, satisfiable / k-colorable
  double predicted = 0.0;      // conditional share among failures
};

struct ExperimentReport {
  std::string mode;  // rate, census, validate
  ExperimentConfig config;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t budget_exceeded = 0;
  double rate = 0.0;
  Interval wilson;
  std::uint32_t leading_excess = 0;  // 0 when the catalog has no member
  double predicted = 0.0;            // NaN when unavailable
  double predicted_failures = 0.0;
  double ratio = 0.0;

  std::vector<CensusRow> census;
  std::uint64_t census_discarded = 0;
  double tv_distance = 0.0;
  std::uint64_t sanity_checked = 0;
  std::uint64_t sanity_violations = 0;

  std::uint64_t agree = 0;
  std::uint64_t disagree = 0;
  std::uint64_t witnesses_checked = 0;
  std::uint64_t witnesses_valid = 0;

  double seconds = 0.0;

  /// Census row for `label`, or nullptr.
  const CensusRow* row(const std::string& label) const;
};

ExperimentReport run_failure_probability(const ExperimentConfig& config);
ExperimentReport run_core_census(const ExperimentConfig& config);
/// Compares the solver against exhaustive oracles. SAT events use the formula
/// model (n <= 18); coloring events the hypergraph model (n <= 13).
ExperimentReport run_solver_validation(const ExperimentConfig& config);

/// Oracle for the maximum number of simultaneously satisfiable clauses, by
/// counting falsified clauses over every assignment.
std::size_t max_sat_oracle(const Formula& f);
/// Plain backtracking over colorings of the whole hypergraph.
bool colorable_oracle(const Hypergraph& g, std::uint32_t k);

inline constexpr int kReportFormatVersion = 1;

void write_report_json(std::ostream& out, const ExperimentReport& report);
void write_report_csv(std::ostream& out, const ExperimentReport& report);

}  // namespace subcrit
