#include "qsvir/ext.hpp"

#include <algorithm>

#include "reduce_core.hpp"

namespace qsvir {

namespace {

BilinearForm bf(long a, long b, long c, long d) {
  return BilinearForm(Rational(a), Rational(b), Rational(c), Rational(d));
}

struct ConcreteTable {
  const ExponentTable& table;

  void apply_exchange(LaurentPoly& coeff, ExtFamily deformed, ExtFamily group_base,
                      long long k, long long l, bool inverse) const {
    const ExchangeExponents& e = table.entry(deformed, group_base);
    Rational qe = e.q_form.value(k, l);
    Rational pe = e.p_form.value(k, l);
    if (!qe.is_integer() || !pe.is_integer())
      throw std::domain_error("ExponentTable: exchange exponent is not an integer at (" +
                              std::to_string(k) + ", " + std::to_string(l) + ")");
    int s = inverse ? -1 : 1;
    coeff *= LaurentPoly::monomial(Rational(1), s * static_cast<int>(qe.to_integer()),
                                   s * static_cast<int>(pe.to_integer()));
  }
};

ExtElement reduce_impl(const ExtElement& x, const ExponentTable& table, DeformationMode mode,
                       bool with_relations) {
  ConcreteTable ct{table};
  ExtElement out;
  for (const auto& [w, c] : x.terms())
    for (auto& [rw, rc] : detail::reduce_word(w, c, ct, mode, with_relations))
      out.add_term(rw, rc);
  return out;
}

}  // namespace

ExponentTable paper_table(DeformationMode mode) {
  ExponentTable t;
  auto set = [&t](ExtFamily d, ExtFamily g, BilinearForm q, BilinearForm p) {
    t.set(d, g, ExchangeExponents{std::move(q), std::move(p)});
  };
  BilinearForm z = BilinearForm::zero();
  switch (mode) {
    case DeformationMode::Classical:
      // The additional elements reduce to the unit classically.
      for (ExtFamily d : {ExtFamily::L, ExtFamily::G, ExtFamily::F})
        for (ExtFamily g : {ExtFamily::T, ExtFamily::K, ExtFamily::R}) set(d, g, z, z);
      break;
    case DeformationMode::Q:
      set(ExtFamily::L, ExtFamily::T, bf(2, 0, 2, 0), z);   // L_k T_l = q^{2(k+1)l} T_l L_k
      set(ExtFamily::L, ExtFamily::K, bf(0, 0, -1, 0), z);  // printed exponent reads as -k
      set(ExtFamily::L, ExtFamily::R, bf(4, 0, 0, 0), z);   // printed exponent reads as 4kl
      set(ExtFamily::G, ExtFamily::T, bf(2, 0, 2, 0), z);   // G_k T_l = q^{2(1+k)l} T_l G_k
      set(ExtFamily::G, ExtFamily::K, z, z);
      set(ExtFamily::G, ExtFamily::R, z, z);
      set(ExtFamily::F, ExtFamily::T, bf(0, -3, 0, 0), z);  // printed exponent reads as 3k
      set(ExtFamily::F, ExtFamily::K, bf(-2, 0, -2, 0), z); // F_k K_l = q^{-2(k+1)l} K_l F_k
      set(ExtFamily::F, ExtFamily::R, z, z);
      break;
    case DeformationMode::PQ:
      set(ExtFamily::L, ExtFamily::T, bf(2, 0, 2, 0), z);
      set(ExtFamily::L, ExtFamily::K, bf(1, 0, 1, 0), z);   // printed exponent reads as (1+l)k
      set(ExtFamily::L, ExtFamily::R, bf(4, 0, 0, 0), bf(-1, 0, 0, 0));
      set(ExtFamily::G, ExtFamily::T, bf(2, 0, 2, 0), bf(-1, 0, -2, 0));
      set(ExtFamily::G, ExtFamily::K, z, z);
      set(ExtFamily::G, ExtFamily::R, z, z);
      set(ExtFamily::F, ExtFamily::T, bf(1, 0, -1, 0), z);  // printed exponent reads as (k-1)l
      set(ExtFamily::F, ExtFamily::K, bf(-2, 0, -2, 0), z);
      set(ExtFamily::F, ExtFamily::R, z, z);
      break;
  }
  return t;
}

ExtElement ext_reduce(const ExtElement& x, const ExponentTable& table) {
  return reduce_impl(x, table, DeformationMode::Q, false);
}

ExtElement ext_reduce_with_relations(const ExtElement& x, const ExponentTable& table,
                                     DeformationMode mode) {
  return reduce_impl(x, table, mode, true);
}

namespace {

TensorElement reduce_tensor_impl(const TensorElement& x, const ExponentTable& table,
                                 DeformationMode mode, bool with_relations) {
  TensorElement out;
  for (const auto& [tw, c] : x.terms()) {
    // Reduce each leg separately, then expand the products of terms.
    std::vector<std::pair<TensorWord, LaurentPoly>> partial{{TensorWord{}, c}};
    for (const auto& leg : tw.legs) {
      ExtElement leg_el(leg);
      ExtElement reduced = reduce_impl(leg_el, table, mode, with_relations);
      std::vector<std::pair<TensorWord, LaurentPoly>> next;
      for (const auto& [pw, pc] : partial) {
        for (const auto& [lw, lc] : reduced.terms()) {
          TensorWord nw = pw;
          nw.legs.push_back(lw);
          next.emplace_back(std::move(nw), pc * lc);
        }
      }
      partial = std::move(next);
    }
    for (auto& [w, cc] : partial) out.add_term(w, cc);
  }
  return out;
}

}  // namespace

TensorElement ext_reduce(const TensorElement& x, const ExponentTable& table) {
  return reduce_tensor_impl(x, table, DeformationMode::Q, false);
}

TensorElement ext_reduce_with_relations(const TensorElement& x, const ExponentTable& table,
                                        DeformationMode mode) {
  return reduce_tensor_impl(x, table, mode, true);
}

}  // namespace qsvir
