#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsvir/solver.hpp"

using namespace qsvir;

namespace {

SolveReport solve(const char* family, DeformationMode mode) {
  AlgebraContext ctx = builtin_context(mode);
  return solve_exponents(*ctx.find_relation(family), mode);
}

}  // namespace

TEST_CASE("LL: one constraint on the L-T exponents") {
  SolveReport rep = solve("LL", DeformationMode::Q);
  CHECK(rep.solvable);
  CHECK(rep.paper_member);
  CHECK(rep.unknowns.size() == 4);
  CHECK(rep.constraint_rows.size() == 1);
  CHECK(rep.solution_dimension == 3);
  CHECK(rep.obstructions.empty());
  REQUIRE(rep.samples.size() == 3);
  CHECK(rep.all_samples_hold());
}

TEST_CASE("GG and FF admit the published exponents") {
  for (const char* fam : {"GG", "FF"}) {
    SolveReport rep = solve(fam, DeformationMode::Q);
    CHECK(rep.solvable);
    CHECK(rep.paper_member);
    CHECK(rep.all_samples_hold());
  }
}

TEST_CASE("LF couples the L-K and F-T exponents") {
  SolveReport rep = solve("LF", DeformationMode::Q);
  CHECK(rep.solvable);
  CHECK(rep.unknowns.size() == 8);
  CHECK(rep.constraint_rows.size() == 4);
  CHECK(rep.solution_dimension == 4);
  // Read verbatim, the printed rows happen to satisfy the constraints.
  CHECK(rep.paper_member);
  CHECK(rep.all_samples_hold());
}

TEST_CASE("LG has a consistent family the printed rows miss") {
  SolveReport rep = solve("LG", DeformationMode::Q);
  CHECK(rep.solvable);
  CHECK(rep.obstructions.empty());
  CHECK_FALSE(rep.paper_member);
  CHECK(rep.all_samples_hold());
}

TEST_CASE("FG is structurally obstructed") {
  SolveReport rep = solve("FG", DeformationMode::Q);
  CHECK_FALSE(rep.solvable);
  CHECK_FALSE(rep.obstructions.empty());
  CHECK_FALSE(rep.paper_member);
  CHECK(rep.samples.empty());
}

TEST_CASE("two-parameter verdicts") {
  CHECK(solve("LL", DeformationMode::PQ).paper_member);
  CHECK(solve("GG", DeformationMode::PQ).paper_member);
  CHECK(solve("FF", DeformationMode::PQ).paper_member);
  SolveReport lf = solve("LF", DeformationMode::PQ);
  CHECK(lf.solvable);
  CHECK_FALSE(lf.paper_member);
  SolveReport lg = solve("LG", DeformationMode::PQ);
  CHECK(lg.solvable);
  CHECK_FALSE(lg.paper_member);
  CHECK(lf.all_samples_hold());
  CHECK(lg.all_samples_hold());
}

TEST_CASE("solved table closes every solvable family") {
  for (auto mode : {DeformationMode::Q, DeformationMode::PQ}) {
    AlgebraContext ctx = builtin_context(mode);
    ExponentTable t = solved_table(mode);
    for (const char* fam : {"LL", "GG", "FF", "LF", "LG"}) {
      const RelationDef& rel = *ctx.find_relation(fam);
      for (long long a = -1; a <= 3; ++a)
        for (long long b = -1; b <= 3; ++b)
          CHECK(check_homomorphism(rel, a, b, t, mode).holds);
    }
  }
}

TEST_CASE("held-out grid is genuinely held out") {
  SolverOptions narrow;
  narrow.grid = IndexRange{0, 2};
  narrow.heldout = IndexRange{5, 8};
  AlgebraContext ctx = builtin_context(DeformationMode::Q);
  SolveReport rep = solve_exponents(*ctx.find_relation("LL"), DeformationMode::Q, narrow);
  CHECK(rep.solvable);
  CHECK(rep.all_samples_hold());
}
