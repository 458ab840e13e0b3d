#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "qsvir/algebra_def.hpp"
#include "qsvir/reports.hpp"

using namespace qsvir;

namespace {

Json load_schema(const std::string& name) {
  std::ifstream in(std::string(QSVIR_DATA_DIR) + "/schemas/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("sweep report validates against its schema") {
  Json schema = load_schema("sweep_report.schema.json");
  AlgebraContext ctx = builtin_context(DeformationMode::Q);
  SweepReport rep = sweep(ctx, all_family_ids(ctx), {-1, 2}, {-1, 2});
  std::string err;
  CHECK(validate_schema(schema, sweep_report_json(rep), &err));
  CHECK(err.empty());

  SweepReport limit = classical_limit_check(ctx, {-1, 2}, {-1, 2});
  CHECK(validate_schema(schema, sweep_report_json(limit), &err));
}

TEST_CASE("hopf report validates against its schema") {
  Json schema = load_schema("hopf_report.schema.json");
  ExponentTable table = paper_table(DeformationMode::Q);
  AlgebraContext ctx = builtin_context(DeformationMode::Q);
  std::vector<AxiomRow> axioms;
  for (long long i = -1; i <= 1; ++i)
    axioms.push_back(AxiomRow{"L", i, check_axioms(ExtLetter{ExtFamily::L, i}, table)});
  std::vector<HomomorphismRow> homs;
  for (long long a = 0; a <= 2; ++a) {
    auto res = check_homomorphism(*ctx.find_relation("LL"), a, 1, table, DeformationMode::Q);
    homs.push_back(HomomorphismRow{"LL", a, 1, res.holds, res.residual_text});
  }
  std::vector<SolveReport> solver{
      solve_exponents(*ctx.find_relation("LL"), DeformationMode::Q)};
  std::string err;
  CHECK(validate_schema(schema, hopf_report_json("paper", axioms, homs, solver), &err));
  CHECK(err.empty());
}

TEST_CASE("solve report validates against its schema") {
  Json schema = load_schema("solve_report.schema.json");
  AlgebraContext ctx = builtin_context(DeformationMode::PQ);
  Json solver = Json::array();
  for (const char* fam : {"LL", "FG"})
    solver.push_back(
        solve_report_json(solve_exponents(*ctx.find_relation(fam), DeformationMode::PQ)));
  Json doc{{"mode", "pq"}, {"solver", std::move(solver)}};
  std::string err;
  CHECK(validate_schema(schema, doc, &err));
  CHECK(err.empty());
}

TEST_CASE("fock report validates against its schema") {
  Json schema = load_schema("fock_report.schema.json");
  SampleParams params{Rational(3, 2), Rational(5, 7), 12, 8};
  std::vector<FockRow> rows{{"LL", 1, 0, true, false}, {"LF", 0, -1, false, true}};
  std::string err;
  CHECK(validate_schema(schema, fock_report_json("pq", params, true, rows), &err));
  CHECK(err.empty());
}

TEST_CASE("the validator actually rejects") {
  Json schema = load_schema("sweep_report.schema.json");
  std::string err;
  CHECK_FALSE(validate_schema(schema, Json{{"mode", "q"}}, &err));
  CHECK(err.find("required") != std::string::npos);

  Json bad = sweep_report_json(SweepReport{"q", {}, {}});
  bad["summary"]["pass"] = "three";
  CHECK_FALSE(validate_schema(schema, bad, &err));

  Json extra = sweep_report_json(SweepReport{"q", {}, {}});
  extra["unexpected"] = 1;
  CHECK_FALSE(validate_schema(schema, extra, &err));

  Json bad_status = sweep_report_json(SweepReport{"q", {}, {}});
  bad_status["families"] = Json::array(
      {Json{{"id", "LL"},
            {"instances", Json::array({Json{{"l", 0},
                                            {"k", 0},
                                            {"status", "MAYBE"},
                                            {"residual_text", ""},
                                            {"terms", 0},
                                            {"micros", 0}}})}}});
  CHECK_FALSE(validate_schema(schema, bad_status, &err));
  CHECK(err.find("enum") != std::string::npos);
}
