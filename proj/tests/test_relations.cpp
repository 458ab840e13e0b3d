#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsvir/relations.hpp"

using namespace qsvir;

namespace {

constexpr GenSym AP = GenSym::BosonRaise;
constexpr GenSym AM = GenSym::BosonLower;

LaurentPoly qp(int e) { return LaurentPoly::q_power(e); }

Element word(std::initializer_list<GenSym> ls, LaurentPoly c = LaurentPoly(1)) {
  return Element(Word(ls), std::move(c));
}

/// The deformed context with the sign of the L realization flipped;
/// linear-in-L relations then fail while quadratic ones still pass.
AlgebraContext corrupted_q_context() {
  AlgebraContext ctx = builtin_context(DeformationMode::Q);
  ctx.realizations['L'].coeff = ScalarTemplate::constant(Rational(1));
  ctx.realizations['L'].coeff.factors.push_back(
      {ScalarFactor::Kind::QPow, LinExpr::lit(1), Rational(1)});
  return ctx;
}

}  // namespace

TEST_CASE("LL instance by hand") {
  // L_1 L_0 and L_0 L_1 in normal form, then the full relation residual.
  AlgebraContext ctx = builtin_context(DeformationMode::Q);
  Element L1L0 = normal_order(realize(GenKind::L, 1, DeformationMode::Q) *
                                  realize(GenKind::L, 0, DeformationMode::Q),
                              ctx.rules);
  CHECK(L1L0 == word({AP, AP, AM}, qp(2)) + word({AP, AP, AP, AM, AM}, qp(4)));
  Element L0L1 = normal_order(realize(GenKind::L, 0, DeformationMode::Q) *
                                  realize(GenKind::L, 1, DeformationMode::Q),
                              ctx.rules);
  CHECK(L0L1 == word({AP, AP, AM}, qp(2) + qp(4)) + word({AP, AP, AP, AM, AM}, qp(6)));
  // q L_1 L_0 - q^-1 L_0 L_1 = [1] L_1 = -q a+ a+ a-
  CHECK(normal_order(qp(1) * L1L0 - qp(-1) * L0L1, ctx.rules) == word({AP, AP, AM}, -qp(1)));

  Residual r = check_relation(ctx, *ctx.find_relation("LL"), 1, 0);
  CHECK(r.holds);
  CHECK(r.value.is_zero());
}

TEST_CASE("spot instances hold") {
  AlgebraContext q = builtin_context(DeformationMode::Q);
  AlgebraContext pq = builtin_context(DeformationMode::PQ);
  // FF with equal indices is trivial in any mode.
  CHECK(check_relation(q, *q.find_relation("FF"), 3, 3).holds);
  CHECK(check_relation(pq, *pq.find_relation("FF"), 3, 3).holds);
  // GG mixes two odd letters.
  CHECK(check_relation(q, *q.find_relation("GG"), 2, 3).holds);
  // FG in the two-parameter mode needs the p-phases to cancel.
  CHECK(check_relation(pq, *pq.find_relation("FG"), 1, 0).holds);
}

TEST_CASE("inadmissible instances are rejected") {
  AlgebraContext ctx = builtin_context(DeformationMode::Q);
  CHECK_FALSE(relation_admissible(ctx, *ctx.find_relation("LF"), 0, -1));
  CHECK_THROWS_AS(check_relation(ctx, *ctx.find_relation("LF"), 0, -1),
                  unsupported_index_error);
  // The sum index matters too: LL at (-1, 0) needs L_{-1}, fine; at
  // (-1, -1) it needs L_{-2}.
  CHECK(relation_admissible(ctx, *ctx.find_relation("LL"), -1, 0));
  CHECK_FALSE(relation_admissible(ctx, *ctx.find_relation("LL"), -1, -1));
}

TEST_CASE("full sweep passes in both deformed modes") {
  for (auto mode : {DeformationMode::Q, DeformationMode::PQ}) {
    AlgebraContext ctx = builtin_context(mode);
    SweepReport rep = sweep(ctx, all_family_ids(ctx), {-1, 4}, {-1, 4});
    CHECK(rep.summary.fail == 0);
    CHECK(rep.summary.pass > 0);
    // Hand count of grid points outside the realizable range on the
    // 6x6 grid: LL 1, FG 6, LF 7, FF 11, LG 1, GG 0.
    CHECK(rep.summary.skipped == 26);
    CHECK(rep.summary.pass + rep.summary.skipped == 6 * 36);
  }
}

TEST_CASE("classical sweep passes") {
  AlgebraContext ctx = builtin_context(DeformationMode::Classical);
  SweepReport rep = sweep(ctx, all_family_ids(ctx), {-1, 4}, {-1, 4});
  CHECK(rep.summary.fail == 0);
  CHECK(rep.summary.skipped == 26);
}

TEST_CASE("empty family set is vacuous") {
  AlgebraContext ctx = builtin_context(DeformationMode::Q);
  SweepReport rep = sweep(ctx, {}, {-1, 4}, {-1, 4});
  CHECK(rep.families.empty());
  CHECK(rep.summary.pass + rep.summary.fail + rep.summary.skipped == 0);
}

TEST_CASE("sweep rejects unknown families and empty ranges") {
  AlgebraContext ctx = builtin_context(DeformationMode::Q);
  CHECK_THROWS_AS(sweep(ctx, {"XX"}, {-1, 4}, {-1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(ctx, {"LL"}, {4, -1}, {-1, 4}), std::invalid_argument);
}

TEST_CASE("classical limit reproduces the undeformed relations") {
  for (auto mode : {DeformationMode::Q, DeformationMode::PQ}) {
    SweepReport rep = classical_limit_check(builtin_context(mode), {-1, 4}, {-1, 4});
    CHECK(rep.summary.fail == 0);
    CHECK(rep.summary.pass > 0);
    CHECK(rep.summary.skipped == 26);
  }
}

TEST_CASE("corrupted realization fails loudly") {
  AlgebraContext bad = corrupted_q_context();
  SweepReport rep = sweep(bad, all_family_ids(bad), {-1, 4}, {-1, 4});
  CHECK(rep.summary.fail > 0);
  // L-quadratic and L-free families survive a sign flip of L.
  Residual ll = check_relation(bad, *bad.find_relation("LL"), 1, 0);
  CHECK_FALSE(ll.holds);
  CHECK_FALSE(ll.value.is_zero());
  CHECK(check_relation(bad, *bad.find_relation("GG"), 1, 2).holds);
}

TEST_CASE("residual symmetry under index exchange") {
  // On the corrupted context the residuals are nonzero, which makes the
  // symmetry checks informative.
  AlgebraContext bad = corrupted_q_context();
  const RelationDef& ll = *bad.find_relation("LL");
  const RelationDef& gg = *bad.find_relation("GG");
  for (long long a = -1; a <= 3; ++a) {
    for (long long b = -1; b <= 3; ++b) {
      if (!relation_admissible(bad, ll, a, b)) continue;
      Element rab = check_relation(bad, ll, a, b).value;
      Element rba = check_relation(bad, ll, b, a).value;
      CHECK(rab == -rba);
      CHECK(check_relation(bad, gg, a, b).value == check_relation(bad, gg, b, a).value);
    }
  }
}
