#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsvir/oscillator.hpp"

namespace qsvir {

/// Letters of the extended algebra: the deformed generators L, G, F and
/// the invertible even group-like elements T, K, R with their inverses.
enum class ExtFamily { L, G, F, T, K, R, Tinv, Kinv, Rinv };

inline bool is_deformed(ExtFamily f) {
  return f == ExtFamily::L || f == ExtFamily::G || f == ExtFamily::F;
}
inline bool is_group_like(ExtFamily f) { return !is_deformed(f); }
inline bool is_inverse(ExtFamily f) {
  return f == ExtFamily::Tinv || f == ExtFamily::Kinv || f == ExtFamily::Rinv;
}
inline ExtFamily base_family(ExtFamily f) {
  switch (f) {
    case ExtFamily::Tinv: return ExtFamily::T;
    case ExtFamily::Kinv: return ExtFamily::K;
    case ExtFamily::Rinv: return ExtFamily::R;
    default: return f;
  }
}
inline ExtFamily inverse_family(ExtFamily f) {
  switch (f) {
    case ExtFamily::T: return ExtFamily::Tinv;
    case ExtFamily::K: return ExtFamily::Kinv;
    case ExtFamily::R: return ExtFamily::Rinv;
    case ExtFamily::Tinv: return ExtFamily::T;
    case ExtFamily::Kinv: return ExtFamily::K;
    case ExtFamily::Rinv: return ExtFamily::R;
    default: throw std::invalid_argument("inverse_family: deformed letters are not invertible");
  }
}

/// Only G is odd; T, K, R are even by construction.
inline int degree(ExtFamily f) { return f == ExtFamily::G ? 1 : 0; }

inline std::string name(ExtFamily f) {
  switch (f) {
    case ExtFamily::L: return "L";
    case ExtFamily::G: return "G";
    case ExtFamily::F: return "F";
    case ExtFamily::T: return "T";
    case ExtFamily::K: return "K";
    case ExtFamily::R: return "R";
    case ExtFamily::Tinv: return "T^-1";
    case ExtFamily::Kinv: return "K^-1";
    case ExtFamily::Rinv: return "R^-1";
  }
  return "?";
}

struct ExtLetter {
  ExtFamily fam = ExtFamily::L;
  long long index = 0;
  auto operator<=>(const ExtLetter&) const = default;
  std::string str() const { return name(fam) + "[" + std::to_string(index) + "]"; }
};

struct ExtWord {
  std::vector<ExtLetter> letters;

  ExtWord() = default;
  ExtWord(std::initializer_list<ExtLetter> ls) : letters(ls) {}
  explicit ExtWord(std::vector<ExtLetter> ls) : letters(std::move(ls)) {}

  int grade() const {
    int d = 0;
    for (const auto& l : letters) d ^= degree(l.fam);
    return d;
  }
  std::size_t deformed_count() const {
    std::size_t c = 0;
    for (const auto& l : letters) c += is_deformed(l.fam);
    return c;
  }
  ExtWord concat(const ExtWord& o) const {
    std::vector<ExtLetter> ls = letters;
    ls.insert(ls.end(), o.letters.begin(), o.letters.end());
    return ExtWord(std::move(ls));
  }
  std::string str() const {
    if (letters.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out += " ";
      out += letters[i].str();
    }
    return out;
  }
  friend auto operator<=>(const ExtWord& a, const ExtWord& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    return a.letters <=> b.letters;
  }
  friend bool operator==(const ExtWord&, const ExtWord&) = default;
};

/// Linear combination of extended words over LaurentPoly.
class ExtElement {
 public:
  using TermMap = std::map<ExtWord, LaurentPoly>;

  ExtElement() = default;
  explicit ExtElement(ExtWord w, LaurentPoly c = LaurentPoly(1)) {
    if (!c.is_zero()) terms_[std::move(w)] = std::move(c);
  }
  static ExtElement unit() { return ExtElement(ExtWord{}); }
  static ExtElement letter(ExtFamily f, long long i) { return ExtElement(ExtWord{{f, i}}); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const ExtWord& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExtElement operator-() const {
    ExtElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  ExtElement& operator+=(const ExtElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  ExtElement& operator-=(const ExtElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const LaurentPoly& s, const ExtElement& x) {
    ExtElement r;
    for (const auto& [w, c] : x.terms_) r.add_term(w, s * c);
    return r;
  }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    ExtElement r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
    return r;
  }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      if (c.is_one())
        out += w.str();
      else
        out += "(" + c.str() + ")*" + w.str();
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// Bilinear integer form a*k*l + b*k + c*l + d used as an exchange
/// exponent. Coordinates are rational so solver output fits; evaluated
/// exponents must come out integral.
struct BilinearForm {
  Rational a, b, c, d;
  BilinearForm() : a(0), b(0), c(0), d(0) {}
  BilinearForm(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  static BilinearForm zero() { return {}; }

  Rational value(long long k, long long l) const {
    return a * Rational(static_cast<long>(k)) * Rational(static_cast<long>(l)) +
           b * Rational(static_cast<long>(k)) + c * Rational(static_cast<long>(l)) + d;
  }
  bool operator==(const BilinearForm&) const = default;

  std::string str(const std::string& k = "k", const std::string& l = "l") const {
    std::string out;
    auto add = [&out](const Rational& r, const std::string& mono) {
      if (r.is_zero()) return;
      if (!out.empty()) out += " + ";
      if (mono.empty())
        out += r.str();
      else if (r.is_one())
        out += mono;
      else if ((-r).is_one())
        out += "-" + mono;
      else
        out += r.str() + "*" + mono;
    };
    add(a, k + "*" + l);
    add(b, k);
    add(c, l);
    add(d, "");
    return out.empty() ? "0" : out;
  }
};

/// Exchange data for one ordered pair (X in {L,G,F}, Y in {T,K,R}):
///   X_k Y_l = q^{q_form(k,l)} p^{p_form(k,l)} Y_l X_k.
struct ExchangeExponents {
  BilinearForm q_form;
  BilinearForm p_form;
  bool operator==(const ExchangeExponents&) const = default;
};

/// Full table over the nine deformed/group-like pairs.
class ExponentTable {
 public:
  const ExchangeExponents& entry(ExtFamily deformed, ExtFamily group_base) const {
    auto it = entries_.find(key(deformed, group_base));
    if (it == entries_.end())
      throw std::invalid_argument("ExponentTable: missing entry " + name(deformed) + "-" +
                                  name(group_base));
    return it->second;
  }
  void set(ExtFamily deformed, ExtFamily group_base, ExchangeExponents e) {
    entries_[key(deformed, group_base)] = std::move(e);
  }
  bool operator==(const ExponentTable&) const = default;

 private:
  static std::pair<int, int> key(ExtFamily d, ExtFamily g) {
    if (!is_deformed(d) || !is_group_like(g) || is_inverse(g))
      throw std::invalid_argument("ExponentTable: key must pair a deformed and a base group-like family");
    return {static_cast<int>(d), static_cast<int>(g)};
  }
  std::map<std::pair<int, int>, ExchangeExponents> entries_;
};

/// The published exchange exponents, read off verbatim (including the
/// rows whose printed exponents look garbled; they are loaded exactly as
/// they parse and the solver reports whether they are consistent).
ExponentTable paper_table(DeformationMode mode);

/// Canonical form in the extended algebra: group-like letters are moved
/// to the left of deformed letters via the exponent table (inverse
/// letters use the negated exponents), the group-like prefix is merged
/// (T_k T_l -> T_{k+l}, T into K or R, K with K, R with R, exact inverse
/// pairs cancel) and sorted, leaving K-R pairs as a sorted commuting
/// pair. Words carrying more than two deformed letters are a usage
/// error: the checks here only ever need the quadratic fragment.
ExtElement ext_reduce(const ExtElement& x, const ExponentTable& table);

/// ext_reduce followed by ordering each deformed pair with the abstract
/// quadratic relations of the given mode (so e.g. G then L rewrites to
/// L then G plus a lower term). Only the one- and two-parameter modes
/// carry these relations.
ExtElement ext_reduce_with_relations(const ExtElement& x, const ExponentTable& table,
                                     DeformationMode mode);

/// Tensor power of the extended algebra with graded (Koszul) products:
/// (x1 (x) x2)(y1 (x) y2) = (-1)^{deg y1 * deg x2} x1y1 (x) x2y2, and the
/// straightforward generalization on longer tensors.
struct TensorWord {
  std::vector<ExtWord> legs;
  TensorWord() = default;
  explicit TensorWord(std::vector<ExtWord> l) : legs(std::move(l)) {}
  friend auto operator<=>(const TensorWord& a, const TensorWord& b) = default;
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (i) out += " (x) ";
      out += legs[i].str();
    }
    return out;
  }
};

class TensorElement {
 public:
  using TermMap = std::map<TensorWord, LaurentPoly>;

  TensorElement() = default;
  explicit TensorElement(TensorWord w, LaurentPoly c = LaurentPoly(1)) {
    if (!c.is_zero()) terms_[std::move(w)] = std::move(c);
  }
  static TensorElement unit(std::size_t legs) {
    return TensorElement(TensorWord(std::vector<ExtWord>(legs)));
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const TensorWord& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const LaurentPoly& s, const TensorElement& x) {
    TensorElement r;
    for (const auto& [w, c] : x.terms_) r.add_term(w, s * c);
    return r;
  }

  /// Componentwise product with the Koszul sign.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    TensorElement r;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        if (wa.legs.size() != wb.legs.size())
          throw std::invalid_argument("TensorElement: mismatched tensor arity");
        int sign_exp = 0;
        for (std::size_t j = 0; j < wb.legs.size(); ++j)
          for (std::size_t i = j + 1; i < wa.legs.size(); ++i)
            sign_exp += wb.legs[j].grade() * wa.legs[i].grade();
        std::vector<ExtWord> legs;
        legs.reserve(wa.legs.size());
        for (std::size_t i = 0; i < wa.legs.size(); ++i)
          legs.push_back(wa.legs[i].concat(wb.legs[i]));
        LaurentPoly c = ca * cb;
        r.add_term(TensorWord(std::move(legs)), sign_exp % 2 ? -c : c);
      }
    }
    return r;
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      if (c.is_one())
        out += w.str();
      else
        out += "(" + c.str() + ")*" + w.str();
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// Per-leg reduction of a tensor element (no letters ever cross legs, so
/// no extra signs arise here).
TensorElement ext_reduce(const TensorElement& x, const ExponentTable& table);
TensorElement ext_reduce_with_relations(const TensorElement& x, const ExponentTable& table,
                                        DeformationMode mode);

}  // namespace qsvir
