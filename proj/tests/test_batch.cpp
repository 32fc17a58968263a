#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nilflat/batch.hpp>
#include <sstream>

#include "fixtures.hpp"

using namespace nilflat;

namespace {
std::vector<AlgebraRecord> records_from(const std::string& text) {
  std::istringstream in(text);
  return parse_records(in, {});
}
}  // namespace

TEST_CASE("record parsing: names, comments, directives") {
  auto recs = records_from(
      "# classification slice\n"
      "heis: 0,0,e^{12}\n"
      "\n"
      "!params l=3\n"
      "fam: 0,0,l*e^{12}\n"
      "!sigma 13\n"
      "withsigma: 0,0,e^{12}\n"
      "0,0,0\n");
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].name == "heis");
  CHECK(recs[1].algebra.a(3, 1, 2) == Rat(3));
  REQUIRE(recs[2].sigma.has_value());
  CHECK((*recs[2].sigma)[0] == 3);
  CHECK((*recs[2].sigma)[1] == 2);
  CHECK(recs[3].name == "line8");
}

TEST_CASE("record parsing errors carry line numbers") {
  CHECK_THROWS_WITH_AS(records_from("0,e^{13}\n"), "line 1: index 3 exceeds n=2", error);
  CHECK_THROWS_AS(records_from("a: 0,0\na: 0,0\n"), error);  // duplicate names
  CHECK_THROWS_AS(records_from("!expect maybe\na: 0,0\n"), error);
  CHECK_THROWS_AS(records_from("!torus 1,0|0,1\nx: 0,0,e^{12}\n"), error);  // wrong row count
}

TEST_CASE("empty input gives an empty report") {
  auto report = run_batch({}, {});
  CHECK(report.outcomes.empty());
  CHECK(report.resolved() == 0);
}

TEST_CASE("strategy resolves grading first, then filtration, then sigma") {
  auto recs = records_from(
      "graded: 0,0,e^{12},e^{13},e^{23},e^{25}+e^{14}\n"
      "nofilt: 0,0,-e^{12},e^{13},e^{14},e^{25}+e^{34}\n");
  auto report = run_batch(recs, {});
  REQUIRE(report.outcomes.size() == 2);
  CHECK(report.outcomes[0].kind == RecordOutcome::ByGrading);
  CHECK(report.outcomes[0].formula_zero);
  CHECK(report.outcomes[0].koszul_zero);
  // the first no-filtration algebra resolves by neither grading nor filtration
  CHECK(report.outcomes[1].kind == RecordOutcome::Unresolved);
  CHECK(report.outcomes[1].diagnostics.find("no adapted filtration in this basis") !=
        std::string::npos);
}

TEST_CASE("jacobi violations fail the record with a diagnostic") {
  auto recs = records_from("bad: 0,0,0,e^{12},e^{13},e^{45}\n");
  auto report = run_batch(recs, {});
  CHECK(report.outcomes[0].kind == RecordOutcome::Failed);
  CHECK(report.outcomes[0].diagnostics.find("jacobi") != std::string::npos);
}

TEST_CASE("sigma records with explicit parameters verify exactly") {
  auto recs = records_from(
      "!sigma 18 26 37 g=1,12/5,2,1,1,12/5,2,1\n"
      "constrained: 0,0,-e^{12},-e^{13},3/2*e^{14}-1/2*e^{23},e^{15}+1/2*e^{24},"
      "e^{16}+e^{25}+e^{34},e^{27}+e^{36}+e^{45}\n");
  BatchOptions opt;
  opt.strategy = {'s'};
  auto report = run_batch(recs, opt);
  CHECK(report.outcomes[0].kind == RecordOutcome::BySigma);
  CHECK(!report.outcomes[0].sigma_generic);
}

TEST_CASE("expectations are compared when present") {
  auto recs = records_from(
      "!expect grading\n"
      "a: 0,0,e^{12},e^{13},e^{23},e^{25}+e^{14}\n"
      "!expect filtration\n"
      "b: 0,0,e^{12},e^{13},e^{23},e^{25}+e^{14}\n");
  auto report = run_batch(recs, {});
  CHECK(report.outcomes[0].expectation_met);
  CHECK(!report.outcomes[1].expectation_met);  // resolved by grading, not filtration
  CHECK(!report.all_expectations_met());
}

TEST_CASE("report is invariant under the parallelism degree") {
  std::string text =
      "a: 0,0,e^{12}\n"
      "b: 0,0,0,e^{12},e^{14},e^{15}+e^{23}+e^{24}\n"
      "c: 0,0,-e^{12},e^{13},e^{14},e^{25}+e^{34}\n"
      "d: 0,0,e^{12},e^{13},e^{23},e^{25}+e^{14}\n";
  auto recs = records_from(text);
  BatchOptions serial;
  BatchOptions parallel;
  parallel.jobs = 4;
  auto a = report_text(run_batch(recs, serial));
  auto b = report_text(run_batch(recs, parallel));
  CHECK(a == b);
}

TEST_CASE("report is invariant under permuting input lines") {
  auto recs1 = records_from("a: 0,0,e^{12}\nb: 0,0,0,e^{12}\n");
  auto recs2 = records_from("b: 0,0,0,e^{12}\na: 0,0,e^{12}\n");
  auto r1 = run_batch(recs1, {});
  auto r2 = run_batch(recs2, {});
  auto find = [](const Report& r, const std::string& name) {
    for (auto& o : r.outcomes)
      if (o.name == name) return report_text(Report{{o}});
    return std::string();
  };
  CHECK(find(r1, "a") == find(r2, "a"));
  CHECK(find(r1, "b") == find(r2, "b"));
}

TEST_CASE("json report round-trips the metric and the flatness certificate") {
  auto recs = records_from("g: 0,0,e^{12},e^{13},e^{23},e^{25}+e^{14}\n");
  auto report = run_batch(recs, {});
  auto j = report_json(report);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["outcome"] == "grading");
  CHECK(j[0]["certificate"]["formula_zero"] == true);
  Mat g = metric_from_json(j[0]["metric"]);
  auto L = parse_algebra(fixtures::dim6_graded);
  CHECK(verify_ricci_flat(L, MetricSpec::explicit_metric(g)).is_flat);
}

TEST_CASE("supplied torus rows are used for the grading step") {
  // rank-1 subtorus of the Heisenberg diagonal torus: weights (1,1,2)
  auto recs = records_from("!torus 1|1|2\nheis: 0,0,e^{12}\n");
  auto report = run_batch(recs, {});
  REQUIRE(report.outcomes[0].kind == RecordOutcome::ByGrading);
  CHECK(report.outcomes[0].sequence->weights_str() == "1,1,2");
}
