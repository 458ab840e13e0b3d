#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qsvir/ext.hpp"

// Shared word-reduction core for the extended algebra. The same
// normalization runs with two coefficient types: plain LaurentPoly
// coefficients for the concrete checks, and coefficients carrying
// symbolic exponent contributions for the exponent solver. The Table
// parameter supplies apply_exchange(coeff, deformed, group_base, k, l,
// inverse), which accounts for one letter exchange.

namespace qsvir::detail {

inline int group_rank(ExtFamily f) {
  switch (f) {
    case ExtFamily::T: return 0;
    case ExtFamily::K: return 1;
    case ExtFamily::R: return 2;
    case ExtFamily::Tinv: return 3;
    case ExtFamily::Kinv: return 4;
    case ExtFamily::Rinv: return 5;
    default: return 6;
  }
}

inline int deformed_rank(ExtFamily f) {
  switch (f) {
    case ExtFamily::L: return 0;
    case ExtFamily::F: return 1;
    case ExtFamily::G: return 2;
    default: return 3;
  }
}

/// One simplification step on the commuting group-like prefix; returns
/// false when the prefix is fully merged.
inline bool prefix_step(std::vector<ExtLetter>& pre) {
  // Exact inverse pairs cancel.
  for (std::size_t i = 0; i < pre.size(); ++i)
    for (std::size_t j = i + 1; j < pre.size(); ++j)
      if (base_family(pre[i].fam) == base_family(pre[j].fam) &&
          is_inverse(pre[i].fam) != is_inverse(pre[j].fam) &&
          pre[i].index == pre[j].index) {
        pre.erase(pre.begin() + static_cast<long>(j));
        pre.erase(pre.begin() + static_cast<long>(i));
        return true;
      }
  // Same-family index addition (T with T, K with K, ..., inverses alike).
  for (std::size_t i = 0; i < pre.size(); ++i)
    for (std::size_t j = i + 1; j < pre.size(); ++j)
      if (pre[i].fam == pre[j].fam) {
        pre[i].index += pre[j].index;
        pre.erase(pre.begin() + static_cast<long>(j));
        return true;
      }
  // T merges into K, otherwise into R; K and R only commute.
  for (std::size_t i = 0; i < pre.size(); ++i) {
    if (pre[i].fam != ExtFamily::T) continue;
    for (ExtFamily target : {ExtFamily::K, ExtFamily::R}) {
      for (std::size_t j = 0; j < pre.size(); ++j) {
        if (pre[j].fam == target) {
          pre[j].index += pre[i].index;
          pre.erase(pre.begin() + static_cast<long>(i));
          return true;
        }
      }
    }
  }
  return false;
}

inline void canonicalize_prefix(std::vector<ExtLetter>& pre) {
  while (prefix_step(pre)) {
  }
  std::sort(pre.begin(), pre.end(), [](const ExtLetter& a, const ExtLetter& b) {
    if (group_rank(a.fam) != group_rank(b.fam)) return group_rank(a.fam) < group_rank(b.fam);
    return a.index < b.index;
  });
}

/// True when a two-letter deformed suffix is out of canonical order
/// (L before F before G, ascending indices within a family) or is a
/// vanishing repeated odd letter.
inline bool suffix_needs_rewrite(const ExtLetter& x, const ExtLetter& y) {
  int rx = deformed_rank(x.fam), ry = deformed_rank(y.fam);
  if (rx != ry) return rx > ry;
  if (x.fam == ExtFamily::G && x.index == y.index) return true;
  return x.index > y.index;
}

/// Rewrites the out-of-order pair via the abstract quadratic relation of
/// the mode; each result word is already suffix-canonical.
inline std::vector<std::pair<std::vector<ExtLetter>, LaurentPoly>> abstract_rewrite(
    const ExtLetter& x, const ExtLetter& y, DeformationMode mode) {
  if (mode == DeformationMode::Classical)
    throw std::invalid_argument("abstract relations are defined for the deformed modes only");
  using Out = std::vector<std::pair<std::vector<ExtLetter>, LaurentPoly>>;
  const long long i = x.index, j = y.index;
  auto qp = [](long long e) { return LaurentPoly::q_power(static_cast<int>(e)); };
  auto pp = [](long long e) { return LaurentPoly::p_power(static_cast<int>(e)); };

  if (x.fam == ExtFamily::L && y.fam == ExtFamily::L) {
    // L_i L_j = q^{2(j-i)} L_j L_i + q^{j-i} [i-j] L_{i+j}   (i > j)
    return Out{{{{ExtFamily::L, j}, {ExtFamily::L, i}}, qp(2 * (j - i))},
               {{{ExtFamily::L, i + j}}, qp(j - i) * q_bracket(i - j)}};
  }
  if (x.fam == ExtFamily::F && y.fam == ExtFamily::F) {
    // F_i F_j = q^{2(i-j)} F_j F_i - q^{i-j} lambda [i-j] F_{i+j}   (i > j)
    return Out{{{{ExtFamily::F, j}, {ExtFamily::F, i}}, qp(2 * (i - j))},
               {{{ExtFamily::F, i + j}}, -(qp(i - j) * lambda_poly() * q_bracket(i - j))}};
  }
  if (x.fam == ExtFamily::G && y.fam == ExtFamily::G) {
    if (i == j) return Out{};  // G_i G_i = 0
    return Out{{{{ExtFamily::G, j}, {ExtFamily::G, i}}, LaurentPoly(-1)}};
  }
  if (x.fam == ExtFamily::F && y.fam == ExtFamily::L) {
    // F_k L_l = q^{-2k} L_l F_k + q^{1-2k} [[k]] F_{k+l}
    return Out{{{{ExtFamily::L, j}, {ExtFamily::F, i}}, qp(-2 * i)},
               {{{ExtFamily::F, i + j}}, qp(1 - 2 * i) * q_box(i)}};
  }
  if (x.fam == ExtFamily::G && y.fam == ExtFamily::L) {
    // G_k L_l = q^{2(l-k)} L_l G_k - q^{l-k} [l-k] G_{k+l}
    // (the two-parameter mode scales both terms by p^{-2l})
    LaurentPoly scale = mode == DeformationMode::PQ ? pp(-2 * j) : LaurentPoly(1);
    return Out{{{{ExtFamily::L, j}, {ExtFamily::G, i}}, scale * qp(2 * (j - i))},
               {{{ExtFamily::G, i + j}}, -(scale * qp(j - i) * q_bracket(j - i))}};
  }
  if (x.fam == ExtFamily::G && y.fam == ExtFamily::F) {
    // G_n F_m = F_m G_n - G_{n+m}
    return Out{{{{ExtFamily::F, j}, {ExtFamily::G, i}}, LaurentPoly(1)},
               {{{ExtFamily::G, i + j}}, LaurentPoly(-1)}};
  }
  throw std::logic_error("abstract_rewrite: unexpected deformed pair");
}

/// Normalizes a single word, producing fully reduced terms. Coefficient
/// type C needs copy, `c *= LaurentPoly` and table.apply_exchange.
template <class C, class Table>
std::vector<std::pair<ExtWord, C>> reduce_word(const ExtWord& w, C coeff, const Table& table,
                                               DeformationMode mode, bool with_relations) {
  if (w.deformed_count() > 2)
    throw std::invalid_argument("ext_reduce: word exceeds the quadratic bound");

  std::vector<ExtLetter> ls = w.letters;
  // Bubble group-like letters left past deformed ones.
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (is_deformed(ls[i].fam) && is_group_like(ls[i + 1].fam)) {
        table.apply_exchange(coeff, ls[i].fam, base_family(ls[i + 1].fam), ls[i].index,
                             ls[i + 1].index, is_inverse(ls[i + 1].fam));
        std::swap(ls[i], ls[i + 1]);
        moved = true;
      }
    }
  }

  std::vector<ExtLetter> prefix, suffix;
  for (const auto& l : ls) (is_group_like(l.fam) ? prefix : suffix).push_back(l);
  canonicalize_prefix(prefix);

  std::vector<std::pair<ExtWord, C>> out;
  if (with_relations && suffix.size() == 2 && suffix_needs_rewrite(suffix[0], suffix[1])) {
    for (auto& [repl, factor] : abstract_rewrite(suffix[0], suffix[1], mode)) {
      std::vector<ExtLetter> nl = prefix;
      nl.insert(nl.end(), repl.begin(), repl.end());
      C c = coeff;
      c *= factor;
      out.emplace_back(ExtWord(std::move(nl)), std::move(c));
    }
  } else {
    std::vector<ExtLetter> nl = prefix;
    nl.insert(nl.end(), suffix.begin(), suffix.end());
    out.emplace_back(ExtWord(std::move(nl)), std::move(coeff));
  }
  return out;
}

}  // namespace qsvir::detail
