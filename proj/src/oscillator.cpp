#include "qsvir/oscillator.hpp"

namespace qsvir {

namespace {

Element elem(std::initializer_list<GenSym> ls, LaurentPoly c = LaurentPoly(1)) {
  return Element(Word(ls), std::move(c));
}

void add_fermion_rules(RewriteSystem& rs) {
  // {f-, f+} = 1 and nilpotency.
  Element one = Element::unit();
  rs.add_rule(GenSym::FermiLower, GenSym::FermiRaise,
              one - elem({GenSym::FermiRaise, GenSym::FermiLower}));
  rs.add_rule(GenSym::FermiRaise, GenSym::FermiRaise, Element::zero());
  rs.add_rule(GenSym::FermiLower, GenSym::FermiLower, Element::zero());
}

void add_fermion_boson_swaps(RewriteSystem& rs, const LaurentPoly& raise_raise,
                             const LaurentPoly& raise_lower,
                             const LaurentPoly& lower_raise,
                             const LaurentPoly& lower_lower) {
  rs.add_rule(GenSym::FermiRaise, GenSym::BosonRaise,
              elem({GenSym::BosonRaise, GenSym::FermiRaise}, raise_raise));
  rs.add_rule(GenSym::FermiRaise, GenSym::BosonLower,
              elem({GenSym::BosonLower, GenSym::FermiRaise}, raise_lower));
  rs.add_rule(GenSym::FermiLower, GenSym::BosonRaise,
              elem({GenSym::BosonRaise, GenSym::FermiLower}, lower_raise));
  rs.add_rule(GenSym::FermiLower, GenSym::BosonLower,
              elem({GenSym::BosonLower, GenSym::FermiLower}, lower_lower));
}

}  // namespace

RewriteSystem builtin_rules(DeformationMode mode) {
  RewriteSystem rs;
  LaurentPoly boson_scalar =
      mode == DeformationMode::Classical ? LaurentPoly(1) : LaurentPoly::q_power(2);
  rs.add_rule(GenSym::BosonLower, GenSym::BosonRaise,
              Element::unit() + elem({GenSym::BosonRaise, GenSym::BosonLower}, boson_scalar));
  add_fermion_rules(rs);
  if (mode == DeformationMode::PQ) {
    // f+ a+ -> p^-2 a+ f+,  f+ a- -> p^2 a- f+,
    // f- a+ -> p^2 a+ f-,   f- a- -> p^-2 a- f-.
    add_fermion_boson_swaps(rs, LaurentPoly::p_power(-2), LaurentPoly::p_power(2),
                            LaurentPoly::p_power(2), LaurentPoly::p_power(-2));
  } else {
    LaurentPoly one(1);
    add_fermion_boson_swaps(rs, one, one, one, one);
  }
  return rs;
}

namespace {

Element rewrite_at(const Word& w, std::size_t pos, const Element& rhs) {
  Element out;
  const auto& ls = w.letters();
  for (const auto& [rw, rc] : rhs.terms()) {
    std::vector<GenSym> nl(ls.begin(), ls.begin() + pos);
    nl.insert(nl.end(), rw.letters().begin(), rw.letters().end());
    nl.insert(nl.end(), ls.begin() + pos + 2, ls.end());
    out.add_term(Word(std::move(nl)), rc);
  }
  return out;
}

}  // namespace

Element normal_order(const Element& x, const RewriteSystem& rules) {
  Element out;
  Element pending = x;
  while (!pending.is_zero()) {
    auto it = pending.terms().begin();
    Word w = it->first;
    LaurentPoly c = it->second;
    auto pos = rules.first_redex(w);
    if (!pos) {
      // Fully reduced; move to the result.
      out.add_term(w, c);
      Element done(w, c);
      pending -= done;
      continue;
    }
    Element replaced = c * rewrite_at(w, *pos, *rules.find(w[*pos], w[*pos + 1]));
    Element old(w, c);
    pending -= old;
    pending += replaced;
  }
  return out;
}

Element normal_order_with_chooser(const Element& x, const RewriteSystem& rules,
                                  const std::function<std::size_t(std::size_t)>& chooser) {
  Element out;
  Element pending = x;
  while (!pending.is_zero()) {
    auto it = pending.terms().begin();
    Word w = it->first;
    LaurentPoly c = it->second;
    auto positions = rules.redexes(w);
    if (positions.empty()) {
      out.add_term(w, c);
      pending -= Element(w, c);
      continue;
    }
    std::size_t pos = positions[chooser(positions.size())];
    Element replaced = c * rewrite_at(w, pos, *rules.find(w[pos], w[pos + 1]));
    pending -= Element(w, c);
    pending += replaced;
  }
  return out;
}

Element boson_pull(int k, DeformationMode mode) {
  if (k < 0) throw std::invalid_argument("boson_pull: k must be nonnegative");
  if (k == 0) return Element::letter(GenSym::BosonLower);
  bool classical = mode == DeformationMode::Classical;
  LaurentPoly drop = classical ? LaurentPoly(k) : q_box(k);
  LaurentPoly pass = classical ? LaurentPoly(1) : LaurentPoly::q_power(2 * k);

  std::vector<GenSym> raised(static_cast<std::size_t>(k) - 1, GenSym::BosonRaise);
  Element out(Word(raised), drop);
  std::vector<GenSym> passed(static_cast<std::size_t>(k), GenSym::BosonRaise);
  passed.push_back(GenSym::BosonLower);
  out.add_term(Word(std::move(passed)), pass);
  return out;
}

Element realize(GenKind kind, long long n, DeformationMode mode) {
  if (!admissible(kind, n))
    throw unsupported_index_error(std::string("realize: index ") + std::to_string(n) +
                                  " not admissible for " + name(kind));
  std::vector<GenSym> ls;
  LaurentPoly coeff(1);
  switch (kind) {
    case GenKind::L:
      ls.insert(ls.end(), static_cast<std::size_t>(n + 1), GenSym::BosonRaise);
      ls.push_back(GenSym::BosonLower);
      coeff = mode == DeformationMode::Classical ? LaurentPoly(-1)
                                                 : -LaurentPoly::q_power(1);
      break;
    case GenKind::G:
      ls.insert(ls.end(), static_cast<std::size_t>(n + 1), GenSym::BosonRaise);
      ls.push_back(GenSym::FermiRaise);
      ls.push_back(GenSym::BosonLower);
      if (mode == DeformationMode::PQ) coeff = LaurentPoly::p_power(-2);
      break;
    case GenKind::F:
      ls.insert(ls.end(), static_cast<std::size_t>(n), GenSym::BosonRaise);
      ls.push_back(GenSym::FermiRaise);
      ls.push_back(GenSym::FermiLower);
      break;
  }
  return Element(Word(std::move(ls)), coeff);
}

}  // namespace qsvir
