#include "qsvir/templates.hpp"

namespace qsvir {

namespace {

using K = ScalarFactor::Kind;

LinExpr v(const std::string& n) { return LinExpr::var(n); }

ScalarTemplate product() { return {}; }

template <typename... Fs>
ScalarTemplate product(ScalarFactor f, Fs... rest) {
  ScalarTemplate s = product(rest...);
  s.factors.insert(s.factors.begin(), f);
  return s;
}

ScalarFactor qpow(LinExpr e) { return {K::QPow, std::move(e), Rational(1)}; }
ScalarFactor ppow(LinExpr e) { return {K::PPow, std::move(e), Rational(1)}; }
ScalarFactor qbr(LinExpr e) { return {K::QBracket, std::move(e), Rational(1)}; }
ScalarFactor qbx(LinExpr e) { return {K::QBox, std::move(e), Rational(1)}; }
ScalarFactor lam() { return {K::Lambda, {}, Rational(1)}; }
ScalarFactor num(long n) { return {K::Const, {}, Rational(n)}; }
ScalarFactor iexpr(LinExpr e) { return {K::IntExpr, std::move(e), Rational(1)}; }

RelationTerm term(ScalarTemplate s, std::vector<GenRef> gens) {
  return {std::move(s), std::move(gens)};
}

GenRef g(char fam, LinExpr idx) { return {fam, std::move(idx)}; }

GeneratorRealization realization_L(DeformationMode mode) {
  GeneratorRealization r;
  r.coeff = mode == DeformationMode::Classical
                ? product(num(-1))
                : product(num(-1), qpow(LinExpr::lit(1)));
  r.factors = {{GenSym::BosonRaise, v("n") + LinExpr::lit(1)},
               {GenSym::BosonLower, LinExpr::lit(1)}};
  return r;
}

GeneratorRealization realization_G(DeformationMode mode) {
  GeneratorRealization r;
  r.coeff = mode == DeformationMode::PQ ? product(ppow(LinExpr::lit(-2))) : product();
  r.factors = {{GenSym::BosonRaise, v("n") + LinExpr::lit(1)},
               {GenSym::FermiRaise, LinExpr::lit(1)},
               {GenSym::BosonLower, LinExpr::lit(1)}};
  return r;
}

GeneratorRealization realization_F() {
  GeneratorRealization r;
  r.coeff = product();
  r.factors = {{GenSym::BosonRaise, v("n")},
               {GenSym::FermiRaise, LinExpr::lit(1)},
               {GenSym::FermiLower, LinExpr::lit(1)}};
  return r;
}

std::vector<RelationDef> deformed_relations(DeformationMode mode) {
  std::vector<RelationDef> rels;
  LinExpr l = v("l"), k = v("k"), m = v("m"), n = v("n");

  // q^(l-k) L_l L_k - q^(k-l) L_k L_l = [l-k] L_{k+l}
  RelationDef LL{"LL", "l", "k", {}, {}};
  LL.lhs = {term(product(qpow(l - k)), {g('L', l), g('L', k)}),
            term(product(num(-1), qpow(k - l)), {g('L', k), g('L', l)})};
  LL.rhs = {term(product(qbr(l - k)), {g('L', k + l)})};
  rels.push_back(LL);

  // F_m G_n - G_n F_m = G_{n+m}
  RelationDef FG{"FG", "m", "n", {}, {}};
  FG.lhs = {term(product(), {g('F', m), g('G', n)}),
            term(product(num(-1)), {g('G', n), g('F', m)})};
  FG.rhs = {term(product(), {g('G', n + m)})};
  rels.push_back(FG);

  // L_l F_k - q^(2k) F_k L_l = -q [[k]] F_{k+l}
  RelationDef LF{"LF", "l", "k", {}, {}};
  LF.lhs = {term(product(), {g('L', l), g('F', k)}),
            term(product(num(-1), qpow(k + k)), {g('F', k), g('L', l)})};
  LF.rhs = {term(product(num(-1), qpow(LinExpr::lit(1)), qbx(k)), {g('F', k + l)})};
  rels.push_back(LF);

  // q^(n-m) F_m F_n - q^(m-n) F_n F_m = lambda [n-m] F_{n+m}
  RelationDef FF{"FF", "m", "n", {}, {}};
  FF.lhs = {term(product(qpow(n - m)), {g('F', m), g('F', n)}),
            term(product(num(-1), qpow(m - n)), {g('F', n), g('F', m)})};
  FF.rhs = {term(product(lam(), qbr(n - m)), {g('F', n + m)})};
  rels.push_back(FF);

  // q^(l-k) L_l G_k - q^(k-l) G_k L_l = [l-k] G_{k+l}
  // (two-parameter mode inserts p^(2l) in front of the second term)
  RelationDef LG{"LG", "l", "k", {}, {}};
  ScalarTemplate lg2 = mode == DeformationMode::PQ
                           ? product(num(-1), ppow(l + l), qpow(k - l))
                           : product(num(-1), qpow(k - l));
  LG.lhs = {term(product(qpow(l - k)), {g('L', l), g('G', k)}),
            term(lg2, {g('G', k), g('L', l)})};
  LG.rhs = {term(product(qbr(l - k)), {g('G', k + l)})};
  rels.push_back(LG);

  // G_m G_n + G_n G_m = 0
  RelationDef GG{"GG", "m", "n", {}, {}};
  GG.lhs = {term(product(), {g('G', m), g('G', n)}),
            term(product(), {g('G', n), g('G', m)})};
  GG.rhs = {};
  rels.push_back(GG);

  return rels;
}

std::vector<RelationDef> classical_relations() {
  std::vector<RelationDef> rels;
  LinExpr l = v("l"), k = v("k"), m = v("m"), n = v("n");

  RelationDef LL{"LL", "l", "k", {}, {}};
  LL.lhs = {term(product(), {g('L', l), g('L', k)}),
            term(product(num(-1)), {g('L', k), g('L', l)})};
  LL.rhs = {term(product(iexpr(l - k)), {g('L', k + l)})};
  rels.push_back(LL);

  RelationDef FG{"FG", "m", "n", {}, {}};
  FG.lhs = {term(product(), {g('F', m), g('G', n)}),
            term(product(num(-1)), {g('G', n), g('F', m)})};
  FG.rhs = {term(product(), {g('G', n + m)})};
  rels.push_back(FG);

  RelationDef LF{"LF", "l", "k", {}, {}};
  LF.lhs = {term(product(), {g('L', l), g('F', k)}),
            term(product(num(-1)), {g('F', k), g('L', l)})};
  LF.rhs = {term(product(num(-1), iexpr(k)), {g('F', k + l)})};
  rels.push_back(LF);

  RelationDef FF{"FF", "m", "n", {}, {}};
  FF.lhs = {term(product(), {g('F', m), g('F', n)}),
            term(product(num(-1)), {g('F', n), g('F', m)})};
  FF.rhs = {};
  rels.push_back(FF);

  RelationDef LG{"LG", "l", "k", {}, {}};
  LG.lhs = {term(product(), {g('L', l), g('G', k)}),
            term(product(num(-1)), {g('G', k), g('L', l)})};
  LG.rhs = {term(product(iexpr(l - k)), {g('G', k + l)})};
  rels.push_back(LG);

  RelationDef GG{"GG", "m", "n", {}, {}};
  GG.lhs = {term(product(), {g('G', m), g('G', n)}),
            term(product(), {g('G', n), g('G', m)})};
  GG.rhs = {};
  rels.push_back(GG);

  return rels;
}

}  // namespace

AlgebraContext builtin_context(DeformationMode mode) {
  AlgebraContext ctx;
  ctx.mode = mode;
  ctx.rules = builtin_rules(mode);
  ctx.realizations['L'] = realization_L(mode);
  ctx.realizations['G'] = realization_G(mode);
  ctx.realizations['F'] = realization_F();
  ctx.relations = mode == DeformationMode::Classical ? classical_relations()
                                                     : deformed_relations(mode);
  return ctx;
}

}  // namespace qsvir
