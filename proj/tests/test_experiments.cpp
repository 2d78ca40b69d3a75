#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "subcrit/experiments.hpp"

using namespace subcrit;

namespace {

ExperimentConfig pl(double alpha, std::uint64_t trials) {
  ExperimentConfig c;
  c.kind = EventKind::kPureLiteralFailure;
  c.n = 30;
  c.r = 3;
  c.alpha = alpha;
  c.trials = trials;
  c.seed = 2024;
  return c;
}

}  // namespace

TEST_CASE("wilson intervals") {
  Interval none = wilson_interval(0, 0);
  CHECK(none.lo == 0.0);
  CHECK(none.hi == 1.0);
  Interval z = wilson_interval(0, 100);
  CHECK(z.lo == 0.0);
  CHECK(z.hi == doctest::Approx(0.0370).epsilon(1e-2));
  Interval half = wilson_interval(50, 100);
  CHECK(half.lo == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(half.hi == doctest::Approx(0.5962).epsilon(1e-3));
}

TEST_CASE("zero density never fails") {
  ExperimentReport r = run_failure_probability(pl(0.0, 500));
  CHECK(r.failures == 0);
  CHECK(r.rate == 0.0);
}

TEST_CASE("reports do not depend on the worker count") {
  ExperimentConfig c = pl(1.2, 4000);
  ExperimentReport one = run_core_census(c);
  c.workers = 3;
  ExperimentReport three = run_core_census(c);
  CHECK(one.failures == three.failures);
  REQUIRE(one.census.size() == three.census.size());
  for (std::size_t i = 0; i < one.census.size(); ++i) {
    CHECK(one.census[i].label == three.census[i].label);
    CHECK(one.census[i].count == three.census[i].count);
  }
  CHECK(one.tv_distance == three.tv_distance);
}

TEST_CASE("census bookkeeping") {
  ExperimentReport r = run_core_census(pl(1.0, 5000));
  std::uint64_t total = 0;
  for (const CensusRow& row : r.census) total += row.count;
  CHECK(total == r.failures - r.census_discarded);
  CHECK(r.leading_excess == 1);
  CHECK(r.predicted == doctest::Approx(2.0 / 3 / 30));
  CHECK(r.sanity_violations == 0);
  const CensusRow* fl = r.row(canonical_key(complementary_pair(3)).hex());
  REQUIRE(fl != nullptr);
  CHECK(fl->aut == 12);
  CHECK(fl->order == 3);
  CHECK(fl->predicted == 1.0);
  CHECK(fl->checked == fl->count);
  CHECK(fl->solvable == fl->count);
  for (const CensusRow& row : r.census)
    if (&row != fl) CHECK(row.predicted == 0.0);
  CHECK(r.wilson.lo <= r.rate);
  CHECK(r.rate <= r.wilson.hi);
}

TEST_CASE("census conditioning drops cores with lower-excess members") {
  ExperimentConfig c = pl(1.2, 3000);
  c.census_min_excess = 2;
  ExperimentReport r = run_core_census(c);
  CHECK(r.census_discarded > 0);
  for (const CensusRow& row : r.census)
    if (row.aut == 12 && row.order == 3) CHECK(row.count == 0);
}

TEST_CASE("empirical failure rate is monotone along the coupled density grid") {
  std::uint64_t prev = 0;
  for (double a : {0.6, 0.9, 1.2}) {
    ExperimentConfig c = pl(a, 3000);
    c.sampler = SamplerMode::kCoupled;
    c.n = 20;
    ExperimentReport r = run_failure_probability(c);
    CHECK(r.failures >= prev);
    prev = r.failures;
  }
}

TEST_CASE("solver validation") {
  ExperimentConfig c = pl(1.0, 300);
  c.kind = EventKind::kUnsat;
  c.n = 12;
  ExperimentReport v = run_solver_validation(c);
  CHECK(v.agree == 300);
  CHECK(v.disagree == 0);
  CHECK(v.witnesses_valid == v.witnesses_checked);
  c.trials = 0;
  CHECK(run_solver_validation(c).agree == 0);
  c.n = 19;
  CHECK_THROWS(run_solver_validation(c));

  ExperimentConfig g;
  g.kind = EventKind::kNonColorable;
  g.n = 10;
  g.r = 2;
  g.k = 3;
  g.alpha = 3.0;
  g.trials = 300;
  ExperimentReport gv = run_solver_validation(g);
  CHECK(gv.disagree == 0);
  CHECK(gv.failures > 0);
  CHECK(gv.witnesses_valid == gv.witnesses_checked);
}

TEST_CASE("unsat and coloring events") {
  ExperimentConfig c = pl(1.0, 300);
  c.kind = EventKind::kUnsat;
  ExperimentReport r = run_failure_probability(c);
  CHECK(r.leading_excess == 0);  // no MUF within the default catalog
  CHECK(std::isnan(r.predicted));

  ExperimentConfig g;
  g.kind = EventKind::kKCore;
  g.n = 40;
  g.r = 2;
  g.k = 3;
  g.alpha = 1.5;
  g.trials = 2000;
  ExperimentReport kr = run_core_census(g);
  CHECK(kr.leading_excess == 2);
  CHECK(kr.predicted == doctest::Approx(std::pow(1.5, 6) / 24 / 1600));
  g.k = 1;
  CHECK_THROWS(run_failure_probability(g));
}

TEST_CASE("report serialization") {
  ExperimentReport r = run_core_census(pl(1.0, 500));
  std::ostringstream js;
  write_report_json(js, r);
  auto j = nlohmann::json::parse(js.str());
  CHECK(j["format_version"] == kReportFormatVersion);
  CHECK(j["mode"] == "census");
  CHECK(j["trials"] == 500);
  CHECK(j["config"]["kind"] == "pl-fail");
  std::ostringstream csv;
  write_report_csv(csv, r);
  CHECK(csv.str().rfind("mode,kind,n,r,k,alpha,trials,seed,statistic,value\n", 0) == 0);
  CHECK(csv.str().find("census,pl-fail,30,3,0,1.0,500,2024,rate,") != std::string::npos);
}
