#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsvir/word.hpp"

namespace qsvir {

/// Which oscillator algebra the rewrite engine works over.
enum class DeformationMode { Classical, Q, PQ };

inline const char* name(DeformationMode m) {
  switch (m) {
    case DeformationMode::Classical: return "classical";
    case DeformationMode::Q: return "q";
    case DeformationMode::PQ: return "pq";
  }
  return "?";
}

inline std::optional<DeformationMode> parse_mode(const std::string& s) {
  if (s == "classical") return DeformationMode::Classical;
  if (s == "q") return DeformationMode::Q;
  if (s == "pq") return DeformationMode::PQ;
  return std::nullopt;
}

struct unsupported_index_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A canonically ordered monomial a+^i a-^j f+^ep f-^em. Every word
/// reaches exactly one such form under the oscillator rewrite rules.
struct NormalWord {
  int boson_raise = 0;  // i
  int boson_lower = 0;  // j
  int fermi_raise = 0;  // ep, at most 1
  int fermi_lower = 0;  // em, at most 1

  Word word() const {
    std::vector<GenSym> ls;
    ls.insert(ls.end(), boson_raise, GenSym::BosonRaise);
    ls.insert(ls.end(), boson_lower, GenSym::BosonLower);
    if (fermi_raise) ls.push_back(GenSym::FermiRaise);
    if (fermi_lower) ls.push_back(GenSym::FermiLower);
    return Word(std::move(ls));
  }
};

/// Parses a word as a NormalWord if it is in canonical order.
inline std::optional<NormalWord> as_normal(const Word& w) {
  NormalWord n;
  std::size_t i = 0;
  const auto& ls = w.letters();
  while (i < ls.size() && ls[i] == GenSym::BosonRaise) ++i, ++n.boson_raise;
  while (i < ls.size() && ls[i] == GenSym::BosonLower) ++i, ++n.boson_lower;
  if (i < ls.size() && ls[i] == GenSym::FermiRaise) ++i, n.fermi_raise = 1;
  if (i < ls.size() && ls[i] == GenSym::FermiLower) ++i, n.fermi_lower = 1;
  if (i != ls.size()) return std::nullopt;
  return n;
}

/// A two-letter rewrite system over the oscillator letters. Rules map an
/// adjacent pair to its replacement element. Orientation is constrained
/// so that rewriting always terminates: a rule either swaps a strictly
/// descending pair (possibly with shorter side terms drawn from the same
/// letters) or annihilates a repeated fermionic letter.
class RewriteSystem {
 public:
  /// Adds `x y -> rhs`; throws std::invalid_argument if the rule cannot
  /// be oriented as a terminating reduction.
  void add_rule(GenSym x, GenSym y, Element rhs) {
    validate(x, y, rhs);
    rules_[{x, y}] = std::move(rhs);
  }

  const Element* find(GenSym x, GenSym y) const {
    auto it = rules_.find({x, y});
    return it == rules_.end() ? nullptr : &it->second;
  }

  const std::map<std::pair<GenSym, GenSym>, Element>& rules() const { return rules_; }

  /// Position of the leftmost adjacent pair with a rule, if any.
  std::optional<std::size_t> first_redex(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (find(w[i], w[i + 1])) return i;
    return std::nullopt;
  }

  /// All positions with an applicable rule.
  std::vector<std::size_t> redexes(const Word& w) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (find(w[i], w[i + 1])) out.push_back(i);
    return out;
  }

 private:
  static void validate(GenSym x, GenSym y, const Element& rhs) {
    if (x == y) {
      if (!rhs.is_zero())
        throw std::invalid_argument("rewrite rule on a repeated letter must have zero right-hand side");
      return;
    }
    if (static_cast<int>(x) < static_cast<int>(y))
      throw std::invalid_argument("rewrite rule left-hand side must be a descending pair");
    for (const auto& [w, c] : rhs.terms()) {
      const auto& ls = w.letters();
      bool ok = ls.empty() || (ls.size() == 1 && (ls[0] == x || ls[0] == y)) ||
                (ls.size() == 2 && ls[0] == y && ls[1] == x);
      if (!ok)
        throw std::invalid_argument("rewrite rule right-hand side is not a reduction of its left-hand side");
    }
  }

  std::map<std::pair<GenSym, GenSym>, Element> rules_;
};

/// The oscillator algebra of the given mode as rewrite rules, oriented
/// toward the canonical order a+ < a- < f+ < f-.
///
/// All modes share {f-, f+} = 1 and (f+-)^2 = 0. Bosons obey
/// a- a+ - a+ a- = 1 classically and a- a+ - q^2 a+ a- = 1 otherwise.
/// In the two-parameter mode fermions pass bosons with p^{+-2} factors;
/// in the other modes they commute exactly.
RewriteSystem builtin_rules(DeformationMode mode);

/// Rewrites every word of x to canonical form, exhaustively applying the
/// rules at the leftmost position. The result is the unique normal form;
/// randomized application order reaches the same element (see
/// normal_order_with_chooser).
Element normal_order(const Element& x, const RewriteSystem& rules);
inline Element normal_order(const Element& x, DeformationMode mode) {
  return normal_order(x, builtin_rules(mode));
}

/// Like normal_order but with a caller-chosen redex at each step:
/// chooser(n) must return an index in [0, n). Used to test confluence.
Element normal_order_with_chooser(const Element& x, const RewriteSystem& rules,
                                  const std::function<std::size_t(std::size_t)>& chooser);

/// Closed form of a- a+^k: [[k]] a+^{k-1} + q^{2k} a+^k a- (with [[k]]
/// replaced by k and q^{2k} by 1 in classical mode). Agrees with
/// normal_order applied to the naive word.
Element boson_pull(int k, DeformationMode mode);

/// The three realized generator families.
enum class GenKind { L, G, F };

inline const char* name(GenKind k) {
  switch (k) {
    case GenKind::L: return "L";
    case GenKind::G: return "G";
    case GenKind::F: return "F";
  }
  return "?";
}

/// Whether the realization of the generator exists at this index:
/// L_n and G_n need n >= -1, F_n needs n >= 0 (only nonnegative powers
/// of a+ occur in the realization).
inline bool admissible(GenKind kind, long long n) {
  return kind == GenKind::F ? n >= 0 : n >= -1;
}

/// The oscillator realization of L_n, G_n or F_n in the given mode:
///   classical: L_n = -a+^{n+1} a-,    G_n = a+^{n+1} f+ a-,        F_n = a+^n f+ f-
///   q:         L_n = -q a+^{n+1} a-,  G_n = a+^{n+1} f+ a-,        F_n = a+^n f+ f-
///   pq:        L_n = -q a+^{n+1} a-,  G_n = p^{-2} a+^{n+1} f+ a-, F_n = a+^n f+ f-
/// Throws unsupported_index_error outside the admissible range.
Element realize(GenKind kind, long long n, DeformationMode mode);

}  // namespace qsvir
