#pragma once

#include "qsvir/ext.hpp"
#include "qsvir/templates.hpp"

namespace qsvir {

/// Coproduct on the extended algebra:
///   D(L_i) = L_i (x) T_i + T_i (x) L_i        D(T_i) = T_i (x) T_i
///   D(G_i) = G_i (x) R_i + R_i (x) G_i        D(K_i) = K_i (x) K_i
///   D(F_i) = F_i (x) K_i + K_i (x) F_i        D(R_i) = R_i (x) R_i
/// extended to words multiplicatively (with Koszul signs) and linearly.
TensorElement coproduct(const ExtLetter& x);
TensorElement coproduct(const ExtWord& w);
TensorElement coproduct(const ExtElement& x);

/// Counit: 0 on L, G, F and 1 on T, K, R and their inverses, extended
/// multiplicatively and linearly.
LaurentPoly counit(const ExtElement& x);

/// Antipode: S(T_i) = T_i^{-1} (likewise K, R) and
/// S(L_i) = -T_i^{-1} L_i T_i^{-1}, S(G_i) = -R_i^{-1} G_i R_i^{-1},
/// S(F_i) = -K_i^{-1} F_i K_i^{-1}, extended to words as the graded
/// anti-homomorphism S(xy) = (-1)^{deg x * deg y} S(y) S(x).
ExtElement antipode(const ExtElement& x);

/// Applies the coproduct to one tensor leg, increasing the arity by one.
TensorElement coproduct_on_leg(const TensorElement& t, std::size_t leg);

/// Applies the counit to one tensor leg, decreasing the arity by one.
TensorElement counit_on_leg(const TensorElement& t, std::size_t leg);

/// Applies the antipode to one tensor leg in place.
TensorElement antipode_on_leg(const TensorElement& t, std::size_t leg);

/// Multiplies tensor legs `leg` and `leg + 1` together (the algebra
/// multiplication map applied to that pair of slots).
TensorElement multiply_legs(const TensorElement& t, std::size_t leg);

/// A one-leg tensor element as a plain element.
ExtElement to_ext(const TensorElement& t);

struct AxiomResult {
  bool coassoc = false;
  bool counit = false;
  bool antipode = false;
  bool all() const { return coassoc && counit && antipode; }
};

/// Verifies coassociativity, the counit axiom and both antipode axioms
/// on one letter, reducing with the given exchange table.
AxiomResult check_axioms(const ExtLetter& x, const ExponentTable& table);

struct HomomorphismResult {
  bool holds = false;
  std::string residual_text;
};

/// Checks that the coproduct respects one relation instance: expands
/// D(LHS) - D(RHS) in the tensor square over the abstract letters,
/// reduces every leg with the exchange table, the group-like merge
/// rules and the abstract quadratic relations, and reports whether the
/// residual vanishes.
HomomorphismResult check_homomorphism(const RelationDef& rel, long long i1, long long i2,
                                      const ExponentTable& table, DeformationMode mode);

/// The relation sides as elements of the abstract extended algebra.
ExtElement abstract_side(const std::vector<RelationTerm>& side, const RelationDef& rel,
                         long long i1, long long i2);

}  // namespace qsvir
