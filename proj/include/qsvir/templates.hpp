#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsvir/oscillator.hpp"

namespace qsvir {

/// Integer-linear expression in named index variables, e.g. `l - k + 1`.
struct LinExpr {
  std::map<std::string, long long> coeffs;  // variable -> coefficient
  long long constant = 0;

  static LinExpr var(const std::string& v, long long c = 1) {
    LinExpr e;
    if (c != 0) e.coeffs[v] = c;
    return e;
  }
  static LinExpr lit(long long c) {
    LinExpr e;
    e.constant = c;
    return e;
  }

  LinExpr& operator+=(const LinExpr& o) {
    for (const auto& [v, c] : o.coeffs) {
      auto& slot = coeffs[v];
      slot += c;
      if (slot == 0) coeffs.erase(v);
    }
    constant += o.constant;
    return *this;
  }
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  LinExpr operator-() const {
    LinExpr e;
    for (const auto& [v, c] : coeffs) e.coeffs[v] = -c;
    e.constant = -constant;
    return e;
  }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a += -b; }

  bool operator==(const LinExpr&) const = default;

  long long eval(const std::map<std::string, long long>& assignment) const {
    long long v = constant;
    for (const auto& [var, c] : coeffs) {
      auto it = assignment.find(var);
      if (it == assignment.end())
        throw std::invalid_argument("LinExpr: unbound index variable " + var);
      v += c * it->second;
    }
    return v;
  }

  /// Renders like `l-k`, `2k+1`, `-2`.
  std::string str() const {
    std::string out;
    for (const auto& [v, c] : coeffs) {
      if (c > 0 && !out.empty()) out += "+";
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += std::to_string(c);
      out += v;
    }
    if (constant != 0 || out.empty()) {
      if (constant >= 0 && !out.empty()) out += "+";
      out += std::to_string(constant);
    }
    return out;
  }
};

/// One multiplicative factor of an index-dependent scalar.
struct ScalarFactor {
  enum class Kind {
    QPow,      // q^(arg)
    PPow,      // p^(arg)
    QBracket,  // [arg]
    QBox,      // [[arg]]
    Lambda,    // q - q^-1
    Const,     // rational literal
    IntExpr,   // (arg) as an integer-valued coefficient
  };
  Kind kind = Kind::Const;
  LinExpr arg;
  Rational value = Rational(1);

  bool operator==(const ScalarFactor&) const = default;
};

/// Product of scalar factors; evaluates to a LaurentPoly once the index
/// variables are bound.
struct ScalarTemplate {
  std::vector<ScalarFactor> factors;

  bool operator==(const ScalarTemplate&) const = default;

  static ScalarTemplate constant(const Rational& r) {
    ScalarTemplate s;
    s.factors.push_back({ScalarFactor::Kind::Const, {}, r});
    return s;
  }

  LaurentPoly eval(const std::map<std::string, long long>& assignment) const {
    LaurentPoly out(1);
    for (const auto& f : factors) {
      switch (f.kind) {
        case ScalarFactor::Kind::QPow:
          out *= LaurentPoly::q_power(static_cast<int>(f.arg.eval(assignment)));
          break;
        case ScalarFactor::Kind::PPow:
          out *= LaurentPoly::p_power(static_cast<int>(f.arg.eval(assignment)));
          break;
        case ScalarFactor::Kind::QBracket:
          out *= q_bracket(f.arg.eval(assignment));
          break;
        case ScalarFactor::Kind::QBox:
          out *= q_box(f.arg.eval(assignment));
          break;
        case ScalarFactor::Kind::Lambda:
          out *= lambda_poly();
          break;
        case ScalarFactor::Kind::Const:
          out *= LaurentPoly(f.value);
          break;
        case ScalarFactor::Kind::IntExpr:
          out *= LaurentPoly(Rational(static_cast<long>(f.arg.eval(assignment))));
          break;
      }
    }
    return out;
  }
};

/// Realization template of one generator family: coefficient times a
/// product of oscillator letters with index-dependent powers, e.g.
/// -q a+^(n+1) a-. An instance is admissible when every boson power is
/// nonnegative and every fermion power is 0 or 1.
struct GeneratorRealization {
  std::string index_var = "n";
  ScalarTemplate coeff;
  std::vector<std::pair<GenSym, LinExpr>> factors;

  bool operator==(const GeneratorRealization&) const = default;

  bool admissible(long long n) const {
    std::map<std::string, long long> a{{index_var, n}};
    for (const auto& [g, e] : factors) {
      long long pw = e.eval(a);
      if (pw < 0) return false;
      if (qsvir::degree(g) == 1 && pw > 1) return false;
    }
    return true;
  }

  Element instantiate(long long n) const {
    std::map<std::string, long long> a{{index_var, n}};
    if (!admissible(n))
      throw unsupported_index_error("realization not defined at index " + std::to_string(n));
    std::vector<GenSym> ls;
    for (const auto& [g, e] : factors)
      ls.insert(ls.end(), static_cast<std::size_t>(e.eval(a)), g);
    return Element(Word(std::move(ls)), coeff.eval(a));
  }
};

/// Reference to an indexed generator inside a relation, e.g. L[l+k].
struct GenRef {
  char family = 'L';  // 'L', 'G' or 'F'
  LinExpr index;
  bool operator==(const GenRef&) const = default;
};

/// One side-term of a relation: scalar template times a product of
/// indexed generators.
struct RelationTerm {
  ScalarTemplate scalar;
  std::vector<GenRef> gens;
  bool operator==(const RelationTerm&) const = default;
};

/// A relation family `id(v1, v2): lhs = rhs` whose instances are indexed
/// by two integers.
struct RelationDef {
  std::string id;
  std::string var1 = "l";
  std::string var2 = "k";
  std::vector<RelationTerm> lhs;
  std::vector<RelationTerm> rhs;
  bool operator==(const RelationDef&) const = default;
};

/// A complete verification context: rewrite rules, realizations of the
/// generator families, and the relation families to check. Built-in
/// contexts cover the three modes; the same structure is produced by the
/// algebra-definition parser.
struct AlgebraContext {
  DeformationMode mode = DeformationMode::Q;
  RewriteSystem rules;
  std::map<char, GeneratorRealization> realizations;
  std::vector<RelationDef> relations;

  const GeneratorRealization& realization(char family) const {
    auto it = realizations.find(family);
    if (it == realizations.end())
      throw std::invalid_argument(std::string("no realization for generator ") + family);
    return it->second;
  }

  const RelationDef* find_relation(const std::string& id) const {
    for (const auto& r : relations)
      if (r.id == id) return &r;
    return nullptr;
  }
};

/// The deformed-oscillator contexts with their published relation
/// families. The classical context is the q = p = 1 counterpart.
AlgebraContext builtin_context(DeformationMode mode);

}  // namespace qsvir
