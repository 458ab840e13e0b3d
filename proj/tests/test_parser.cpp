#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qsvir/algebra_def.hpp"
#include "qsvir/relations.hpp"

using namespace qsvir;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string data_file(const std::string& rel) {
  return std::string(QSVIR_DATA_DIR) + "/" + rel;
}

const char* kMinimal =
    "mode q\n"
    "generator a+ degree 0\n"
    "generator a- degree 0\n"
    "generator f+ degree 1\n"
    "generator f- degree 1\n"
    "rule: a- a+ -> 1 + q^(2) a+ a-\n"
    "realize L[n]: - q^(1) a+^(n+1) a-\n"
    "relation LL(l,k): q^(l-k) L[l] L[k] - q^(k-l) L[k] L[l] = [l-k] L[k+l]\n";

}  // namespace

TEST_CASE("a single rule parses to the boson exchange") {
  AlgebraDef def = parse_algebra_def(kMinimal);
  REQUIRE(def.rules.size() == 1);
  auto& [x, y, rhs] = def.rules[0];
  CHECK(x == GenSym::BosonLower);
  CHECK(y == GenSym::BosonRaise);
  CHECK(rhs == Element::unit() + Element(Word{GenSym::BosonRaise, GenSym::BosonLower},
                                         LaurentPoly::q_power(2)));
}

TEST_CASE("a relation line parses to one family with two index variables") {
  AlgebraDef def = parse_algebra_def(kMinimal);
  REQUIRE(def.relations.size() == 1);
  const RelationDef& ll = def.relations[0];
  CHECK(ll.id == "LL");
  CHECK(ll.var1 == "l");
  CHECK(ll.var2 == "k");
  CHECK(ll.lhs.size() == 2);
  CHECK(ll.rhs.size() == 1);
  // The right-hand side coefficient is the q-integer of l-k.
  CHECK(ll.rhs[0].scalar.eval({{"l", 3}, {"k", 1}}) == q_bracket(2));
  CHECK(ll.rhs[0].gens[0].index.eval({{"l", 3}, {"k", 1}}) == 4);
}

TEST_CASE("malformed input is rejected with a position") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_algebra_def(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.col >= 1);
    }
  };
  // Empty right-hand side.
  expect_error(
      "mode q\ngenerator a+ degree 0\ngenerator a- degree 0\nrule: a- a+ ->\n", 4);
  // Unknown symbol.
  expect_error("mode q\ngenerator a+ degree 0\nrule: a- a+ -> 1\n", 3);
  // Duplicate declaration.
  expect_error("mode q\ngenerator a+ degree 0\ngenerator a+ degree 0\n", 3);
  // Wrong parity.
  expect_error("mode q\ngenerator f+ degree 0\n", 2);
  // Unorientable rule.
  expect_error("mode q\ngenerator a+ degree 0\ngenerator a- degree 0\n"
               "rule: a+ a- -> a- a+\n", 4);
  // Malformed exponent.
  expect_error("mode q\ngenerator a+ degree 0\ngenerator a- degree 0\n"
               "rule: a- a+ -> q^() a+ a-\n", 4);
}

TEST_CASE("bundled files parse and match the built-in contexts") {
  struct Pair {
    const char* file;
    DeformationMode mode;
  };
  for (auto [file, mode] : {Pair{"algebras/classical.alg", DeformationMode::Classical},
                            Pair{"algebras/q.alg", DeformationMode::Q},
                            Pair{"algebras/pq.alg", DeformationMode::PQ}}) {
    AlgebraDef def = parse_algebra_def(slurp(data_file(file)));
    AlgebraContext parsed = def.context();
    AlgebraContext builtin = builtin_context(mode);
    CHECK(parsed.mode == builtin.mode);
    CHECK(parsed.rules.rules() == builtin.rules.rules());
    CHECK(parsed.realizations == builtin.realizations);
    CHECK(parsed.relations == builtin.relations);
  }
}

TEST_CASE("parse-render-parse is a fixed point on the whole corpus") {
  for (const char* file :
       {"algebras/classical.alg", "algebras/q.alg", "algebras/pq.alg",
        "algebras/q_negative_control.alg", "algebras/pq_negative_control.alg"}) {
    AlgebraDef def = parse_algebra_def(slurp(data_file(file)));
    AlgebraDef reparsed = parse_algebra_def(render_algebra_def(def));
    CHECK(def == reparsed);
    // And once more: rendering is stable.
    CHECK(render_algebra_def(reparsed) == render_algebra_def(def));
  }
}

TEST_CASE("negative-control files verify as failing") {
  AlgebraContext bad_q =
      parse_algebra_def(slurp(data_file("algebras/q_negative_control.alg"))).context();
  SweepReport rep = sweep(bad_q, all_family_ids(bad_q), {-1, 3}, {-1, 3});
  CHECK(rep.summary.fail > 0);

  AlgebraContext bad_pq =
      parse_algebra_def(slurp(data_file("algebras/pq_negative_control.alg"))).context();
  SweepReport rep2 = sweep(bad_pq, {"LG"}, {-1, 3}, {-1, 3});
  CHECK(rep2.summary.fail > 0);
  // Instances with l = 0 keep the broken p-power invisible.
  CHECK(check_relation(bad_pq, *bad_pq.find_relation("LG"), 0, 2).holds);
}

TEST_CASE("parsed contexts verify like built-in ones") {
  AlgebraContext ctx = parse_algebra_def(slurp(data_file("algebras/pq.alg"))).context();
  SweepReport rep = sweep(ctx, all_family_ids(ctx), {-1, 3}, {-1, 3});
  CHECK(rep.summary.fail == 0);
  CHECK(rep.summary.pass > 0);
}
