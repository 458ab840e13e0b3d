#pragma once

#include <compare>
#include <map>
#include <string>

#include "qsvir/templates.hpp"

namespace qsvir {

/// Basis ket |n, eps>: boson occupancy n >= 0 and fermion occupancy
/// eps in {0, 1}.
struct FockLabel {
  int n = 0;
  int eps = 0;
  auto operator<=>(const FockLabel&) const = default;
};

/// Sample point and truncation for the numeric oracle. |q_val| must
/// differ from 0 and 1 so the boson ladder eigenvalues stay pairwise
/// distinct; p_val must be nonzero.
struct SampleParams {
  Rational q_val = Rational(3, 2);
  Rational p_val = Rational(1);
  int truncation = 12;  // N
  int margin = 8;       // d

  void validate(DeformationMode mode) const {
    if (truncation < 1) throw std::invalid_argument("SampleParams: truncation must be positive");
    if (margin < 1 || margin > truncation)
      throw std::invalid_argument("SampleParams: margin must lie in [1, truncation]");
    if (p_val.is_zero()) throw std::invalid_argument("SampleParams: p must be nonzero");
    if (mode != DeformationMode::Classical) {
      if (q_val.is_zero() || q_val == Rational(1) || q_val == Rational(-1))
        throw std::invalid_argument("SampleParams: q must avoid 0 and +-1");
    }
  }
};

/// Sparse vector of the truncated Fock space, with exact rational
/// components. Components pushed above the truncation by a+ are dropped
/// and recorded in the overflow flag (a flag, never an error).
class FockVector {
 public:
  explicit FockVector(int truncation) : truncation_(truncation) {}

  static FockVector basis(int n, int eps, int truncation) {
    FockVector v(truncation);
    v.add(n, eps, Rational(1));
    return v;
  }

  int truncation() const { return truncation_; }
  bool overflow() const { return overflow_; }
  void mark_overflow() { overflow_ = true; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<FockLabel, Rational>& components() const { return comps_; }

  void add(int n, int eps, const Rational& c) {
    if (c.is_zero()) return;
    if (n < 0 || n > truncation_ || eps < 0 || eps > 1)
      throw std::invalid_argument("FockVector: label out of range");
    FockLabel key{n, eps};
    auto it = comps_.find(key);
    if (it == comps_.end()) {
      comps_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    overflow_ = overflow_ || o.overflow_;
    for (const auto& [lab, c] : o.comps_) add(lab.n, lab.eps, c);
    return *this;
  }

  FockVector scaled(const Rational& s) const {
    FockVector out(truncation_);
    out.overflow_ = overflow_;
    if (s.is_zero()) return out;
    for (const auto& [lab, c] : comps_) out.comps_.emplace(lab, s * c);
    return out;
  }

  /// Component equality; the overflow flag is bookkeeping, not a value.
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.comps_ == b.comps_;
  }

  std::string str() const {
    if (comps_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lab, c] : comps_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + c.str() + ")|" + std::to_string(lab.n) + "," + std::to_string(lab.eps) + ">";
    }
    return out;
  }

 private:
  std::map<FockLabel, Rational> comps_;
  int truncation_ = 0;
  bool overflow_ = false;
};

/// One oscillator letter acting on the truncated Fock space:
///   a+ |n,e> = |n+1,e>                      (drops at the truncation)
///   a- |n,e> = [[n]](q_val) |n-1,e>         (n in classical mode)
///   f+ |n,0> = p^{-2n} |n,1>,  f+ |n,1> = 0
///   f- |n,1> = p^{2n} |n,0>,   f- |n,0> = 0
/// with p = 1 outside the two-parameter mode.
FockVector apply_generator(GenSym g, const FockVector& v, const SampleParams& params,
                           DeformationMode mode);

/// Words act right-to-left; coefficients are evaluated exactly at the
/// sample point and the overflow flag is propagated.
FockVector apply_element(const Element& x, const FockVector& v, const SampleParams& params,
                         DeformationMode mode);

/// True iff x and y act identically on every basis ket |n,eps> with
/// n <= N - d. Truncation honesty: if a component was ever dropped, the
/// check is certified only when every word of x and y shifts the boson
/// level by the same net amount (the drop then concerns components that
/// lie outside the truncated space on both sides); otherwise the margin
/// is too small and a usage error is thrown.
bool crosscheck(const Element& x, const Element& y, const SampleParams& params,
                DeformationMode mode);

}  // namespace qsvir
