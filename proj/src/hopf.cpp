#include "qsvir/hopf.hpp"

namespace qsvir {

namespace {

ExtFamily partner(ExtFamily f) {
  switch (f) {
    case ExtFamily::L: return ExtFamily::T;
    case ExtFamily::G: return ExtFamily::R;
    case ExtFamily::F: return ExtFamily::K;
    default: return f;
  }
}

ExtFamily ext_family_of(char c) {
  switch (c) {
    case 'L': return ExtFamily::L;
    case 'G': return ExtFamily::G;
    case 'F': return ExtFamily::F;
  }
  throw std::invalid_argument(std::string("unknown deformed generator ") + c);
}

}  // namespace

TensorElement coproduct(const ExtLetter& x) {
  TensorElement out;
  if (is_deformed(x.fam)) {
    ExtLetter y{partner(x.fam), x.index};
    out.add_term(TensorWord{{ExtWord{x}, ExtWord{y}}}, LaurentPoly(1));
    out.add_term(TensorWord{{ExtWord{y}, ExtWord{x}}}, LaurentPoly(1));
  } else {
    out.add_term(TensorWord{{ExtWord{x}, ExtWord{x}}}, LaurentPoly(1));
  }
  return out;
}

TensorElement coproduct(const ExtWord& w) {
  TensorElement out = TensorElement::unit(2);
  for (const auto& l : w.letters) out = out * coproduct(l);
  return out;
}

TensorElement coproduct(const ExtElement& x) {
  TensorElement out;
  for (const auto& [w, c] : x.terms()) out += c * coproduct(w);
  return out;
}

LaurentPoly counit(const ExtElement& x) {
  LaurentPoly out;
  for (const auto& [w, c] : x.terms()) {
    bool kills = false;
    for (const auto& l : w.letters)
      if (is_deformed(l.fam)) kills = true;
    if (!kills) out += c;
  }
  return out;
}

namespace {

ExtElement antipode_letter(const ExtLetter& x) {
  if (is_group_like(x.fam))
    return ExtElement::letter(inverse_family(x.fam), x.index);
  ExtFamily inv = inverse_family(partner(x.fam));
  ExtWord w{{inv, x.index}, x, {inv, x.index}};
  return ExtElement(w, LaurentPoly(-1));
}

}  // namespace

ExtElement antipode(const ExtElement& x) {
  ExtElement out;
  for (const auto& [w, c] : x.terms()) {
    // S(x1...xn) = sign * S(xn)...S(x1); reversing odd letters past each
    // other contributes (-1) per odd pair.
    int odd = 0;
    for (const auto& l : w.letters) odd += degree(l.fam);
    int sign = ((odd * (odd - 1) / 2) % 2) ? -1 : 1;
    ExtElement prod = ExtElement::unit();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      prod = prod * antipode_letter(*it);
    out += (LaurentPoly(sign) * c) * prod;
  }
  return out;
}

TensorElement coproduct_on_leg(const TensorElement& t, std::size_t leg) {
  TensorElement out;
  for (const auto& [tw, c] : t.terms()) {
    TensorElement dleg = coproduct(ExtElement(tw.legs.at(leg)));
    for (const auto& [dw, dc] : dleg.terms()) {
      std::vector<ExtWord> legs;
      legs.reserve(tw.legs.size() + 1);
      for (std::size_t i = 0; i < tw.legs.size(); ++i) {
        if (i == leg) {
          legs.push_back(dw.legs[0]);
          legs.push_back(dw.legs[1]);
        } else {
          legs.push_back(tw.legs[i]);
        }
      }
      out.add_term(TensorWord(std::move(legs)), c * dc);
    }
  }
  return out;
}

TensorElement counit_on_leg(const TensorElement& t, std::size_t leg) {
  TensorElement out;
  for (const auto& [tw, c] : t.terms()) {
    LaurentPoly e = counit(ExtElement(tw.legs.at(leg)));
    if (e.is_zero()) continue;
    std::vector<ExtWord> legs;
    for (std::size_t i = 0; i < tw.legs.size(); ++i)
      if (i != leg) legs.push_back(tw.legs[i]);
    out.add_term(TensorWord(std::move(legs)), c * e);
  }
  return out;
}

TensorElement antipode_on_leg(const TensorElement& t, std::size_t leg) {
  TensorElement out;
  for (const auto& [tw, c] : t.terms()) {
    ExtElement s = antipode(ExtElement(tw.legs.at(leg)));
    for (const auto& [sw, sc] : s.terms()) {
      TensorWord nw = tw;
      nw.legs[leg] = sw;
      out.add_term(nw, c * sc);
    }
  }
  return out;
}

TensorElement multiply_legs(const TensorElement& t, std::size_t leg) {
  TensorElement out;
  for (const auto& [tw, c] : t.terms()) {
    std::vector<ExtWord> legs;
    for (std::size_t i = 0; i < tw.legs.size(); ++i) {
      if (i == leg) {
        legs.push_back(tw.legs[i].concat(tw.legs.at(i + 1)));
        ++i;
      } else {
        legs.push_back(tw.legs[i]);
      }
    }
    out.add_term(TensorWord(std::move(legs)), c);
  }
  return out;
}

ExtElement to_ext(const TensorElement& t) {
  ExtElement out;
  for (const auto& [tw, c] : t.terms()) {
    if (tw.legs.size() != 1)
      throw std::invalid_argument("to_ext: tensor element is not one-legged");
    out.add_term(tw.legs[0], c);
  }
  return out;
}

AxiomResult check_axioms(const ExtLetter& x, const ExponentTable& table) {
  AxiomResult res;
  TensorElement d = coproduct(x);

  TensorElement left = ext_reduce(coproduct_on_leg(d, 0), table);
  TensorElement right = ext_reduce(coproduct_on_leg(d, 1), table);
  res.coassoc = (left == right);

  ExtElement id_x = ext_reduce(ExtElement(ExtWord{x}), table);
  ExtElement c0 = ext_reduce(to_ext(counit_on_leg(d, 0)), table);
  ExtElement c1 = ext_reduce(to_ext(counit_on_leg(d, 1)), table);
  res.counit = (c0 == id_x) && (c1 == id_x);

  ExtElement target =
      ext_reduce(counit(ExtElement(ExtWord{x})) * ExtElement::unit(), table);
  ExtElement s0 = ext_reduce(to_ext(multiply_legs(antipode_on_leg(d, 0), 0)), table);
  ExtElement s1 = ext_reduce(to_ext(multiply_legs(antipode_on_leg(d, 1), 0)), table);
  res.antipode = (s0 == target) && (s1 == target);

  return res;
}

ExtElement abstract_side(const std::vector<RelationTerm>& side, const RelationDef& rel,
                         long long i1, long long i2) {
  std::map<std::string, long long> a{{rel.var1, i1}, {rel.var2, i2}};
  ExtElement out;
  for (const auto& t : side) {
    ExtElement prod = ExtElement::unit();
    for (const auto& ref : t.gens)
      prod = prod * ExtElement::letter(ext_family_of(ref.family), ref.index.eval(a));
    out += t.scalar.eval(a) * prod;
  }
  return out;
}

HomomorphismResult check_homomorphism(const RelationDef& rel, long long i1, long long i2,
                                      const ExponentTable& table, DeformationMode mode) {
  ExtElement lhs = abstract_side(rel.lhs, rel, i1, i2);
  ExtElement rhs = abstract_side(rel.rhs, rel, i1, i2);
  TensorElement diff = coproduct(lhs) - coproduct(rhs);
  TensorElement residual = ext_reduce_with_relations(diff, table, mode);
  return HomomorphismResult{residual.is_zero(), residual.str()};
}

}  // namespace qsvir
