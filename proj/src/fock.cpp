#include "qsvir/fock.hpp"

#include <optional>

namespace qsvir {

namespace {

Rational lower_coefficient(int n, const SampleParams& params, DeformationMode mode) {
  if (mode == DeformationMode::Classical) return Rational(static_cast<long>(n));
  return q_box(n).eval(params.q_val, params.p_val);
}

Rational fermi_phase(int n, int exponent_sign, const SampleParams& params,
                     DeformationMode mode) {
  if (mode != DeformationMode::PQ) return Rational(1);
  return params.p_val.pow(static_cast<long>(2 * n * exponent_sign));
}

}  // namespace

FockVector apply_generator(GenSym g, const FockVector& v, const SampleParams& params,
                           DeformationMode mode) {
  FockVector out(v.truncation());
  if (v.overflow()) out.mark_overflow();
  for (const auto& [lab, c] : v.components()) {
    switch (g) {
      case GenSym::BosonRaise:
        if (lab.n == v.truncation())
          out.mark_overflow();
        else
          out.add(lab.n + 1, lab.eps, c);
        break;
      case GenSym::BosonLower:
        if (lab.n > 0) out.add(lab.n - 1, lab.eps, c * lower_coefficient(lab.n, params, mode));
        break;
      case GenSym::FermiRaise:
        if (lab.eps == 0) out.add(lab.n, 1, c * fermi_phase(lab.n, -1, params, mode));
        break;
      case GenSym::FermiLower:
        if (lab.eps == 1) out.add(lab.n, 0, c * fermi_phase(lab.n, +1, params, mode));
        break;
    }
  }
  return out;
}

FockVector apply_element(const Element& x, const FockVector& v, const SampleParams& params,
                         DeformationMode mode) {
  FockVector out(v.truncation());
  if (v.overflow()) out.mark_overflow();
  for (const auto& [w, coeff] : x.terms()) {
    FockVector cur = v;
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
      cur = apply_generator(*it, cur, params, mode);
    out += cur.scaled(coeff.eval(params.q_val, params.p_val));
  }
  return out;
}

bool crosscheck(const Element& x, const Element& y, const SampleParams& params,
                DeformationMode mode) {
  params.validate(mode);
  const int top = params.truncation - params.margin;

  // Net boson shift shared by every word of both sides, if there is one.
  bool homogeneous = true, seen = false;
  long long common_shift = 0;
  for (const Element* e : {&x, &y}) {
    for (const auto& [w, c] : e->terms()) {
      long long s = 0;
      for (GenSym g : w.letters()) {
        if (g == GenSym::BosonRaise) ++s;
        if (g == GenSym::BosonLower) --s;
      }
      if (!seen) {
        common_shift = s;
        seen = true;
      } else if (s != common_shift) {
        homogeneous = false;
      }
    }
  }
  std::optional<long long> shift;
  if (homogeneous && seen) shift = common_shift;
  for (int n = 0; n <= top; ++n) {
    for (int eps = 0; eps <= 1; ++eps) {
      FockVector ket = FockVector::basis(n, eps, params.truncation);
      FockVector rx = apply_element(x, ket, params, mode);
      FockVector ry = apply_element(y, ket, params, mode);
      if (rx.overflow() || ry.overflow()) {
        // A drop is harmless only when every contribution of both sides
        // would land above the truncation anyway.
        bool certified = shift && n + *shift > params.truncation;
        if (!certified)
          throw std::invalid_argument(
              "crosscheck: margin too small, truncation reached with recoverable components");
      }
      if (!(rx == ry)) return false;
    }
  }
  return true;
}

}  // namespace qsvir
