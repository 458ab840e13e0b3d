#pragma once

#include <compare>
#include <map>
#include <string>

#include "qsvir/rational.hpp"

namespace qsvir {

/// Exponent pair of a monomial q^q_exp * p^p_exp.
struct Exponents {
  int q_exp = 0;
  int p_exp = 0;
  auto operator<=>(const Exponents&) const = default;
};

/// Exact Laurent polynomial in the two deformation variables q and p,
/// with rational coefficients. This is the coefficient ring of every
/// algebraic object in the library.
///
/// Canonical form: no zero coefficients are stored and terms are kept
/// sorted lexicographically by (q_exp, p_exp), so value equality is
/// representation equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

  /// c * q^qe * p^pe
  static LaurentPoly monomial(const Rational& c, int qe, int pe = 0) {
    LaurentPoly r;
    if (!c.is_zero()) r.terms_[{qe, pe}] = c;
    return r;
  }
  static LaurentPoly q_power(int e) { return monomial(Rational(1), e, 0); }
  static LaurentPoly p_power(int e) { return monomial(Rational(1), 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second.is_one();
  }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.q_exp + eb.q_exp, ea.p_exp + eb.p_exp}, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ < b.terms_;
  }

  /// Exact evaluation at q = q_val, p = p_val.
  /// Substituting zero for a variable that occurs with a negative
  /// exponent is a domain error.
  Rational eval(const Rational& q_val, const Rational& p_val) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      if ((e.q_exp < 0 && q_val.is_zero()) || (e.p_exp < 0 && p_val.is_zero()))
        throw std::domain_error("LaurentPoly::eval: zero substituted at a pole");
      sum += c * q_val.pow(e.q_exp) * p_val.pow(e.p_exp);
    }
    return sum;
  }

  /// Terms sorted by (q_exp, p_exp), rendered `c*q^i*p^j` and joined by
  /// ` + `, with unit factors omitted (so `1 + q^2`, `-q^-1 + q`).
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      std::string mono = monomial_str(e);
      if (mono.empty()) {
        out += c.str();
      } else if (c.is_one()) {
        out += mono;
      } else if ((-c).is_one()) {
        out += "-" + mono;
      } else {
        out += c.str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  static std::string monomial_str(const Exponents& e) {
    std::string m;
    if (e.q_exp != 0) m += (e.q_exp == 1) ? "q" : "q^" + std::to_string(e.q_exp);
    if (e.p_exp != 0) {
      if (!m.empty()) m += "*";
      m += (e.p_exp == 1) ? "p" : "p^" + std::to_string(e.p_exp);
    }
    return m;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

/// The q-integer [x] = (q^x - q^{-x})/(q - q^{-1}) in divided form:
/// sum of q^{x-1-2j} for j = 0..x-1 when x > 0, zero at x = 0, and
/// [-x] = -[x]. At q = 1 this evaluates to x.
inline LaurentPoly q_bracket(long long x) {
  if (x == 0) return LaurentPoly();
  bool neg = x < 0;
  long long n = neg ? -x : x;
  LaurentPoly r;
  for (long long j = 0; j < n; ++j)
    r += LaurentPoly::q_power(static_cast<int>(n - 1 - 2 * j));
  return neg ? -r : r;
}

/// The box q-integer [[x]] = (1 - q^{2x})/(1 - q^2) in divided form:
/// 1 + q^2 + ... + q^{2(x-1)} for x > 0, zero at x = 0, and
/// [[-x]] = -(q^{-2} + q^{-4} + ... + q^{-2x}). Satisfies the ladder
/// identity [[x]] - q^2 [[x-1]] = 1 for every integer x.
inline LaurentPoly q_box(long long x) {
  LaurentPoly r;
  if (x > 0) {
    for (long long j = 0; j < x; ++j) r += LaurentPoly::q_power(static_cast<int>(2 * j));
  } else if (x < 0) {
    for (long long j = 1; j <= -x; ++j) r -= LaurentPoly::q_power(static_cast<int>(-2 * j));
  }
  return r;
}

/// lambda = q - q^{-1}
inline LaurentPoly lambda_poly() {
  return LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
}

}  // namespace qsvir
