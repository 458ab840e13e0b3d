#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsvir/laurent.hpp"

namespace qsvir {

/// Oscillator generator symbols. The raising/lowering bosons are even,
/// the fermions odd; the algebra unit is the empty word, so no letter
/// is needed for it.
enum class GenSym : std::uint8_t {
  BosonRaise,  // a+
  BosonLower,  // a-
  FermiRaise,  // f+
  FermiLower,  // f-
};

inline int degree(GenSym g) {
  return (g == GenSym::FermiRaise || g == GenSym::FermiLower) ? 1 : 0;
}

inline const char* name(GenSym g) {
  switch (g) {
    case GenSym::BosonRaise: return "a+";
    case GenSym::BosonLower: return "a-";
    case GenSym::FermiRaise: return "f+";
    case GenSym::FermiLower: return "f-";
  }
  return "?";
}

/// A monomial of the free algebra: a finite ordered sequence of letters.
/// The empty word is the unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<GenSym> ls) : letters_(ls) {}
  explicit Word(std::vector<GenSym> ls) : letters_(std::move(ls)) {}

  const std::vector<GenSym>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  GenSym operator[](std::size_t i) const { return letters_[i]; }

  Word concat(const Word& o) const {
    std::vector<GenSym> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(ls));
  }

  /// Z2 degree: parity of the number of fermionic letters.
  int grade() const {
    int d = 0;
    for (GenSym g : letters_) d ^= degree(g);
    return d;
  }

  /// Letters joined by spaces, e.g. `a+ a+ a- f+`; the unit renders as `1`.
  std::string str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += " ";
      out += name(letters_[i]);
    }
    return out;
  }

  // Order by length, then letter-by-letter; gives deterministic term order.
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<GenSym> letters_;
};

inline int grade(const Word& w) { return w.grade(); }

/// An element of the free Z2-graded algebra: a finite LaurentPoly-linear
/// combination of words. No zero coefficients are stored, so equality of
/// values is equality of representations. This module performs no
/// rewriting; the quotient by the oscillator relations lives elsewhere.
class Element {
 public:
  using TermMap = std::map<Word, LaurentPoly>;

  Element() = default;
  explicit Element(Word w) { terms_[std::move(w)] = LaurentPoly(1); }
  Element(Word w, LaurentPoly c) {
    if (!c.is_zero()) terms_[std::move(w)] = std::move(c);
  }

  static Element unit() { return Element(Word{}); }
  static Element zero() { return Element(); }
  static Element letter(GenSym g) { return Element(Word{g}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element operator-() const {
    Element r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  Element& operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  friend Element operator*(const LaurentPoly& s, const Element& x) {
    Element r;
    for (const auto& [w, c] : x.terms_) r.add_term(w, s * c);
    return r;
  }

  /// Bilinear extension of word concatenation.
  friend Element operator*(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
    return r;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Homogeneous Z2 degree shared by all words, if there is one.
  /// The zero element is homogeneous of either degree; it reports 0.
  std::optional<int> homogeneous_grade() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.grade();
    for (const auto& [w, c] : terms_)
      if (w.grade() != d) return std::nullopt;
    return d;
  }

  /// `(<coeff>)*<word>` terms joined by ` + `; `0` when empty.
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

inline Element multiply(const Element& a, const Element& b) { return a * b; }

/// Graded bracket [x,y] = xy - (-1)^{deg x * deg y} yx on homogeneous
/// elements; a commutator unless both arguments are odd, when it is the
/// anticommutator. Non-homogeneous arguments are a usage error.
inline Element graded_bracket(const Element& x, const Element& y) {
  auto dx = x.homogeneous_grade();
  auto dy = y.homogeneous_grade();
  if (!dx || !dy)
    throw std::invalid_argument("graded_bracket: arguments must be graded-homogeneous");
  Element yx = y * x;
  return (*dx * *dy) % 2 ? x * y + yx : x * y - yx;
}

}  // namespace qsvir
