#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qsvir/reports.hpp"

using Json = nlohmann::json;

namespace {

std::filesystem::path out_path(const char* tag) {
  return std::filesystem::temp_directory_path() /
         (std::string("qsvir_cli_test_") + tag + "_" + std::to_string(::getpid()) + ".json");
}

int run(const std::string& args) {
  std::string cmd = std::string("\"") + QSVIR_BIN + "\" " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string data_file(const std::string& rel) {
  return std::string(QSVIR_DATA_DIR) + "/" + rel;
}

Json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("verify exits 0 on a clean sweep and writes the report") {
  auto out = out_path("verify");
  CHECK(run("verify --mode q --l-range=-1..4 --k-range=-1..4 --out \"" + out.string() + "\"") ==
        0);
  Json rep = read_json(out);
  CHECK(rep["summary"]["fail"] == 0);
  CHECK(rep["summary"]["pass"].get<long long>() > 0);
  std::filesystem::remove(out);
}

TEST_CASE("verify exits 1 on the corrupted corpus with a rendered residual") {
  auto out = out_path("negctl");
  CHECK(run("verify --algebra \"" + data_file("algebras/q_negative_control.alg") +
            "\" --l-range=-1..4 --k-range=-1..4 --out \"" + out.string() + "\"") == 1);
  Json rep = read_json(out);
  bool rendered = false;
  for (const auto& fam : rep["families"])
    for (const auto& inst : fam["instances"])
      if (inst["status"] == "FAIL" && inst["residual_text"] != "0") rendered = true;
  CHECK(rendered);
  std::filesystem::remove(out);
}

TEST_CASE("usage and parse problems exit 2") {
  CHECK(run("verify --mode nonsense") == 2);
  CHECK(run("verify --l-range=oops") == 2);
  CHECK(run("no-such-command") == 2);
  // A malformed algebra file is a parse error, not an I/O error.
  auto bad = out_path("badalg");
  {
    std::ofstream f(bad);
    f << "mode q\nrule: a- a+ ->\n";
  }
  CHECK(run("verify --algebra \"" + bad.string() + "\"") == 2);
  CHECK(run("parse-check \"" + bad.string() + "\"") == 2);
  std::filesystem::remove(bad);
}

TEST_CASE("io problems exit 3") {
  CHECK(run("verify --algebra /nonexistent/path.alg") == 3);
  CHECK(run("verify --mode q --l-range=0..1 --k-range=0..1 --families LL "
            "--out /nonexistent/dir/report.json") == 3);
}

TEST_CASE("hopf axioms command exits 0") {
  CHECK(run("hopf --axioms --indices=-3..3") == 0);
}

TEST_CASE("hopf homomorphism honestly reports the failing families") {
  CHECK(run("hopf --homomorphism --families LL,GG --l-range=-1..2 --k-range=-1..2") == 0);
  CHECK(run("hopf --homomorphism --families LG --l-range=2..3 --k-range=2..3") == 1);
  CHECK(run("hopf --homomorphism --families LG --table solved --l-range=2..3 --k-range=2..3") ==
        0);
}

TEST_CASE("fock command exits 0 on the clean algebra and 1 on fidelity breakage") {
  CHECK(run("fock --mode pq --l-range=-1..3 --k-range=-1..3") == 0);
  // Margin exceeding the truncation is a usage error.
  CHECK(run("fock --margin 20 --truncation 12") == 2);
}

TEST_CASE("parse-check reports counts and a fixed point") {
  auto out = out_path("parse");
  CHECK(run("parse-check \"" + data_file("algebras/q.alg") + "\" --out \"" + out.string() +
            "\"") == 0);
  Json rep = read_json(out);
  CHECK(rep["ok"] == true);
  CHECK(rep["generators"] == 4);
  CHECK(rep["rules"] == 8);
  CHECK(rep["realizations"] == 3);
  CHECK(rep["relations"] == 6);
  CHECK(rep["roundtrip_fixed_point"] == true);
  std::filesystem::remove(out);
}

TEST_CASE("solve-exponents writes a schema-shaped report and exits 0") {
  auto out = out_path("solve");
  CHECK(run("solve-exponents --mode q --families LL,FG --out \"" + out.string() + "\"") == 0);
  Json rep = read_json(out);
  CHECK(rep["solver"].size() == 2);
  CHECK(rep["solver"][0]["paper_member"] == true);
  CHECK(rep["solver"][1]["solvable"] == false);
  std::filesystem::remove(out);
}

TEST_CASE("every command's report validates against its bundled schema") {
  struct Case {
    const char* schema;
    std::string args;
    const char* tag;
  };
  const Case cases[] = {
      {"sweep_report.schema.json", "verify --mode q --l-range=-1..2 --k-range=-1..2", "s1"},
      {"sweep_report.schema.json", "classical-limit --mode pq --l-range=-1..2 --k-range=-1..2",
       "s2"},
      {"hopf_report.schema.json",
       "hopf --axioms --homomorphism --indices=-1..1 --l-range=0..1 --k-range=0..1 "
       "--families LL,GG",
       "s3"},
      {"solve_report.schema.json", "solve-exponents --mode pq", "s4"},
      {"fock_report.schema.json", "fock --mode q --l-range=-1..2 --k-range=-1..2", "s5"},
      {"parse_report.schema.json",
       "parse-check \"" + data_file("algebras/classical.alg") + "\"", "s6"},
  };
  for (const auto& c : cases) {
    auto out = out_path(c.tag);
    run(c.args + " --out \"" + out.string() + "\"");
    std::ifstream schema_in(data_file(std::string("schemas/") + c.schema));
    REQUIRE(schema_in.good());
    Json schema = Json::parse(schema_in);
    std::string err;
    CHECK_MESSAGE(qsvir::validate_schema(schema, read_json(out), &err), c.schema, ": ", err);
    std::filesystem::remove(out);
  }
}
