#include "qsvir/solver.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "reduce_core.hpp"

namespace qsvir {

namespace {

/// Rational-affine combination of solver unknowns.
struct AffineExpr {
  std::map<int, Rational> coeffs;
  Rational constant = Rational(0);

  void add(int id, const Rational& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(id);
    if (it == coeffs.end()) {
      coeffs.emplace(id, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }
  AffineExpr& operator+=(const AffineExpr& o) {
    for (const auto& [id, c] : o.coeffs) add(id, c);
    constant += o.constant;
    return *this;
  }
  AffineExpr& operator-=(const AffineExpr& o) {
    for (const auto& [id, c] : o.coeffs) add(id, -c);
    constant -= o.constant;
    return *this;
  }
  bool operator==(const AffineExpr&) const = default;
  auto operator<=>(const AffineExpr& o) const {
    if (auto c = coeffs <=> o.coeffs; c != 0) return c;
    return constant <=> o.constant;
  }
};

struct SymCoeff {
  LaurentPoly known{1};
  AffineExpr eq;
  AffineExpr ep;
  SymCoeff& operator*=(const LaurentPoly& f) {
    known *= f;
    return *this;
  }
};

/// One ansatz entry: the eight unknown ids of the q- and p-forms
/// (p ids unused outside the two-parameter mode, marked -1).
struct AnsatzEntry {
  int q[4] = {-1, -1, -1, -1};
  int p[4] = {-1, -1, -1, -1};
};

struct SymbolicTable {
  std::map<std::pair<int, int>, AnsatzEntry> entries;
  mutable std::vector<std::string> stray_pairs;  // exchanges with no ansatz

  void apply_exchange(SymCoeff& c, ExtFamily d, ExtFamily g, long long k, long long l,
                      bool inverse) const {
    auto it = entries.find({static_cast<int>(d), static_cast<int>(g)});
    if (it == entries.end()) {
      stray_pairs.push_back(name(d) + "-" + name(g));
      return;
    }
    Rational s(inverse ? -1L : 1L);
    const Rational kk(static_cast<long>(k)), ll(static_cast<long>(l));
    const Rational mult[4] = {kk * ll, kk, ll, Rational(1)};
    for (int i = 0; i < 4; ++i) {
      if (it->second.q[i] >= 0) c.eq.add(it->second.q[i], s * mult[i]);
      if (it->second.p[i] >= 0) c.ep.add(it->second.p[i], s * mult[i]);
    }
  }
};

/// Sparse linear equation sum(coeffs * x) = rhs.
struct LinRow {
  std::map<int, Rational> coeffs;
  Rational rhs;
  auto operator<=>(const LinRow& o) const {
    if (auto c = coeffs <=> o.coeffs; c != 0) return c;
    return rhs <=> o.rhs;
  }
};

struct LinearSystem {
  int unknowns = 0;
  std::vector<LinRow> rows;           // reduced rows, pivot coefficient 1
  std::vector<int> pivot_of_row;
  bool consistent = true;

  void add_row(LinRow row) {
    // Forward-eliminate against existing rows, then insert if nonzero.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int piv = pivot_of_row[r];
      auto it = row.coeffs.find(piv);
      if (it == row.coeffs.end()) continue;
      Rational f = it->second;
      for (const auto& [id, c] : rows[r].coeffs) {
        auto jt = row.coeffs.find(id);
        Rational nv = (jt == row.coeffs.end() ? Rational(0) : jt->second) - f * c;
        if (nv.is_zero())
          row.coeffs.erase(id);
        else
          row.coeffs[id] = nv;
      }
      row.rhs -= f * rows[r].rhs;
    }
    if (row.coeffs.empty()) {
      if (!row.rhs.is_zero()) consistent = false;
      return;
    }
    int piv = row.coeffs.begin()->first;
    Rational lead = row.coeffs.begin()->second;
    for (auto& [id, c] : row.coeffs) c /= lead;
    row.rhs /= lead;
    // Back-substitute into earlier rows.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = rows[r].coeffs.find(piv);
      if (it == rows[r].coeffs.end()) continue;
      Rational f = it->second;
      for (const auto& [id, c] : row.coeffs) {
        auto jt = rows[r].coeffs.find(id);
        Rational nv = (jt == rows[r].coeffs.end() ? Rational(0) : jt->second) - f * c;
        if (nv.is_zero())
          rows[r].coeffs.erase(id);
        else
          rows[r].coeffs[id] = nv;
      }
      rows[r].rhs -= f * row.rhs;
    }
    rows.push_back(std::move(row));
    pivot_of_row.push_back(piv);
  }

  bool satisfied_by(const std::vector<Rational>& x) const {
    for (const auto& row : rows) {
      Rational v(0);
      for (const auto& [id, c] : row.coeffs) v += c * x[static_cast<std::size_t>(id)];
      if (!(v == row.rhs)) return false;
    }
    return consistent;
  }

  std::vector<Rational> particular() const {
    std::vector<Rational> x(static_cast<std::size_t>(unknowns), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      x[static_cast<std::size_t>(pivot_of_row[r])] = rows[r].rhs;
    return x;
  }

  std::vector<std::vector<Rational>> nullspace() const {
    std::set<int> pivots(pivot_of_row.begin(), pivot_of_row.end());
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < unknowns; ++f) {
      if (pivots.count(f)) continue;
      std::vector<Rational> v(static_cast<std::size_t>(unknowns), Rational(0));
      v[static_cast<std::size_t>(f)] = Rational(1);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto it = rows[r].coeffs.find(f);
        if (it != rows[r].coeffs.end())
          v[static_cast<std::size_t>(pivot_of_row[r])] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }
};

std::string render_row(const LinRow& row, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [id, c] : row.coeffs) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += names[static_cast<std::size_t>(id)];
  }
  return out + " = " + row.rhs.str();
}

std::vector<std::pair<ExtFamily, ExtFamily>> involved_pairs(const RelationDef& rel) {
  std::set<char> fams;
  for (const auto* side : {&rel.lhs, &rel.rhs})
    for (const auto& t : *side)
      for (const auto& g : t.gens) fams.insert(g.family);
  auto to_ext = [](char c) {
    return c == 'L' ? ExtFamily::L : c == 'G' ? ExtFamily::G : ExtFamily::F;
  };
  auto partner = [](ExtFamily f) {
    return f == ExtFamily::L ? ExtFamily::T : f == ExtFamily::G ? ExtFamily::R : ExtFamily::K;
  };
  std::vector<char> v(fams.begin(), fams.end());
  std::vector<std::pair<ExtFamily, ExtFamily>> out;
  if (v.size() == 1) {
    out.emplace_back(to_ext(v[0]), partner(to_ext(v[0])));
  } else if (v.size() == 2) {
    out.emplace_back(to_ext(v[0]), partner(to_ext(v[1])));
    out.emplace_back(to_ext(v[1]), partner(to_ext(v[0])));
  } else {
    throw std::invalid_argument("solve_exponents: relation must involve one or two families");
  }
  return out;
}

/// Splits a one-term Laurent polynomial into (coefficient, exponents).
std::optional<std::tuple<Rational, int, int>> as_monomial(const LaurentPoly& p) {
  if (p.term_count() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  return std::make_tuple(c, e.q_exp, e.p_exp);
}

struct SymTerm {
  LaurentPoly known;
  AffineExpr eq, ep;
};

ExponentTable table_from_solution(const std::vector<std::pair<ExtFamily, ExtFamily>>& pairs,
                                  const std::map<std::pair<int, int>, AnsatzEntry>& entries,
                                  const std::vector<Rational>& x, DeformationMode mode) {
  ExponentTable t = paper_table(mode);
  for (const auto& [d, g] : pairs) {
    const AnsatzEntry& e = entries.at({static_cast<int>(d), static_cast<int>(g)});
    auto coord = [&x](int id) { return id >= 0 ? x[static_cast<std::size_t>(id)] : Rational(0); };
    ExchangeExponents ex;
    ex.q_form = BilinearForm(coord(e.q[0]), coord(e.q[1]), coord(e.q[2]), coord(e.q[3]));
    ex.p_form = BilinearForm(coord(e.p[0]), coord(e.p[1]), coord(e.p[2]), coord(e.p[3]));
    t.set(d, g, ex);
  }
  return t;
}

std::string describe_table(const std::vector<std::pair<ExtFamily, ExtFamily>>& pairs,
                           const ExponentTable& t) {
  std::string out;
  for (const auto& [d, g] : pairs) {
    if (!out.empty()) out += "; ";
    const auto& e = t.entry(d, g);
    out += name(d) + "-" + name(g) + ": q^(" + e.q_form.str() + ")";
    if (!(e.p_form == BilinearForm::zero())) out += " p^(" + e.p_form.str() + ")";
  }
  return out;
}

}  // namespace

SolveReport solve_exponents(const RelationDef& rel, DeformationMode mode,
                            const SolverOptions& opts) {
  if (mode == DeformationMode::Classical)
    throw std::invalid_argument("solve_exponents: deformed modes only");
  SolveReport report;
  report.family = rel.id;
  report.mode = name(mode);

  auto pairs = involved_pairs(rel);

  // Register unknowns.
  SymbolicTable sym;
  std::vector<std::string> names;
  const char* slot_names[4] = {"a", "b", "c", "d"};
  for (const auto& [d, g] : pairs) {
    AnsatzEntry entry;
    for (int i = 0; i < 4; ++i) {
      entry.q[i] = static_cast<int>(names.size());
      names.push_back(name(d) + name(g) + ".q." + slot_names[i]);
    }
    if (mode == DeformationMode::PQ) {
      for (int i = 0; i < 4; ++i) {
        entry.p[i] = static_cast<int>(names.size());
        names.push_back(name(d) + name(g) + ".p." + slot_names[i]);
      }
    }
    sym.entries[{static_cast<int>(d), static_cast<int>(g)}] = entry;
  }
  report.unknowns = names;

  LinearSystem system;
  system.unknowns = static_cast<int>(names.size());
  std::set<LinRow> seen_rows;

  // Expand the homomorphism difference over the grid with symbolic
  // exchange exponents; each forced cancellation is a linear equation.
  for (long long i1 = opts.grid.lo; i1 <= opts.grid.hi; ++i1) {
    for (long long i2 = opts.grid.lo; i2 <= opts.grid.hi; ++i2) {
      ExtElement lhs = abstract_side(rel.lhs, rel, i1, i2);
      ExtElement rhs = abstract_side(rel.rhs, rel, i1, i2);
      TensorElement diff = coproduct(lhs) - coproduct(rhs);

      std::map<TensorWord, std::vector<SymTerm>> groups;
      for (const auto& [tw, c] : diff.terms()) {
        std::vector<std::pair<TensorWord, SymCoeff>> partial{{TensorWord{}, SymCoeff{c, {}, {}}}};
        for (const auto& leg : tw.legs) {
          std::vector<std::pair<TensorWord, SymCoeff>> next;
          for (const auto& [pw, pc] : partial) {
            for (auto& [lw, lc] :
                 detail::reduce_word(leg, SymCoeff{LaurentPoly(1), {}, {}}, sym, mode, true)) {
              TensorWord nw = pw;
              nw.legs.push_back(lw);
              SymCoeff combined;
              combined.known = pc.known * lc.known;
              combined.eq = pc.eq;
              combined.eq += lc.eq;
              combined.ep = pc.ep;
              combined.ep += lc.ep;
              next.emplace_back(std::move(nw), std::move(combined));
            }
          }
          partial = std::move(next);
        }
        for (auto& [w, cc] : partial)
          groups[w].push_back(SymTerm{cc.known, cc.eq, cc.ep});
      }

      auto point = "(" + rel.var1 + "=" + std::to_string(i1) + "," + rel.var2 + "=" +
                   std::to_string(i2) + ")";

      for (auto& [word, terms] : groups) {
        // Merge terms with identical symbolic exponents.
        std::map<std::pair<AffineExpr, AffineExpr>, LaurentPoly> merged;
        for (auto& t : terms) {
          auto key = std::make_pair(t.eq, t.ep);
          auto it = merged.find(key);
          if (it == merged.end())
            merged.emplace(key, t.known);
          else
            it->second += t.known;
        }
        std::vector<SymTerm> reduced;
        for (auto& [key, known] : merged) {
          if (known.is_zero()) continue;
          // Fold monomial exponents into the affine constants.
          SymTerm t{known, key.first, key.second};
          if (auto mono = as_monomial(known)) {
            auto [c, qe, pe] = *mono;
            t.known = LaurentPoly(c);
            t.eq.constant += Rational(qe);
            t.ep.constant += Rational(pe);
          }
          reduced.push_back(std::move(t));
        }
        // Re-merge after folding.
        std::map<std::pair<AffineExpr, AffineExpr>, LaurentPoly> merged2;
        for (auto& t : reduced) {
          auto key = std::make_pair(t.eq, t.ep);
          auto it = merged2.find(key);
          if (it == merged2.end())
            merged2.emplace(key, t.known);
          else
            it->second += t.known;
        }
        std::vector<SymTerm> final_terms;
        for (auto& [key, known] : merged2)
          if (!known.is_zero()) final_terms.push_back(SymTerm{known, key.first, key.second});

        if (final_terms.empty()) continue;
        if (final_terms.size() == 2) {
          auto m0 = as_monomial(final_terms[0].known);
          auto m1 = as_monomial(final_terms[1].known);
          if (m0 && m1 && std::get<0>(*m0) == -std::get<0>(*m1) && std::get<1>(*m0) == 0 &&
              std::get<1>(*m1) == 0 && std::get<2>(*m0) == 0 && std::get<2>(*m1) == 0) {
            for (auto part : {0, 1}) {
              AffineExpr d = part == 0 ? final_terms[0].eq : final_terms[0].ep;
              d -= part == 0 ? final_terms[1].eq : final_terms[1].ep;
              LinRow row;
              row.coeffs = d.coeffs;
              row.rhs = -d.constant;
              if (row.coeffs.empty() && row.rhs.is_zero()) continue;
              if (seen_rows.insert(row).second) system.add_row(row);
            }
            continue;
          }
        }
        // Anything else cannot be cancelled by exponent choices alone.
        std::string detail = "uncancelled at " + point + ": ";
        for (std::size_t i = 0; i < final_terms.size(); ++i) {
          if (i) detail += " + ";
          detail += "(" + final_terms[i].known.str() + ")*" + word.str();
        }
        if (report.obstructions.size() < 8) report.obstructions.push_back(detail);
      }
    }
  }

  if (!sym.stray_pairs.empty())
    report.obstructions.push_back("exchange outside the ansatz: " + sym.stray_pairs.front());

  for (const auto& row : system.rows) report.constraint_rows.push_back(render_row(row, names));
  if (!system.consistent) report.obstructions.push_back("inconsistent linear system");
  report.solvable = system.consistent && report.obstructions.empty();
  report.solution_dimension =
      report.solvable ? system.unknowns - static_cast<long long>(system.rows.size()) : 0;

  // Membership of the published exponents.
  {
    ExponentTable paper = paper_table(mode);
    std::vector<Rational> x(static_cast<std::size_t>(system.unknowns), Rational(0));
    for (const auto& [d, g] : pairs) {
      const AnsatzEntry& e = sym.entries.at({static_cast<int>(d), static_cast<int>(g)});
      const ExchangeExponents& ex = paper.entry(d, g);
      const Rational qv[4] = {ex.q_form.a, ex.q_form.b, ex.q_form.c, ex.q_form.d};
      const Rational pv[4] = {ex.p_form.a, ex.p_form.b, ex.p_form.c, ex.p_form.d};
      for (int i = 0; i < 4; ++i) {
        if (e.q[i] >= 0) x[static_cast<std::size_t>(e.q[i])] = qv[i];
        if (e.p[i] >= 0) x[static_cast<std::size_t>(e.p[i])] = pv[i];
      }
    }
    report.paper_member = report.solvable && system.satisfied_by(x);
  }

  // Soundness: sampled members must pass on the held-out grid.
  if (report.solvable) {
    std::vector<Rational> particular = system.particular();
    auto basis = system.nullspace();
    {
      ExponentTable pt = table_from_solution(pairs, sym.entries, particular, mode);
      for (const auto& [d, g] : pairs)
        report.particular_entries.emplace_back(d, g, pt.entry(d, g));
    }
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int s = 0; s < opts.samples; ++s) {
      std::vector<Rational> x = particular;
      for (const auto& v : basis) {
        int t = coef(rng);
        if (t == 0) continue;
        for (std::size_t i = 0; i < x.size(); ++i)
          x[i] += Rational(t) * v[i];
      }
      bool integral = true;
      for (const auto& c : x) integral = integral && c.is_integer();
      SampleOutcome outcome;
      if (!integral) {
        outcome.description = "skipped non-integral sample";
        outcome.holds_on_heldout = false;
        report.samples.push_back(outcome);
        continue;
      }
      ExponentTable t = table_from_solution(pairs, sym.entries, x, mode);
      outcome.description = describe_table(pairs, t);
      outcome.holds_on_heldout = true;
      for (long long i1 = opts.heldout.lo; i1 <= opts.heldout.hi; ++i1)
        for (long long i2 = opts.heldout.lo; i2 <= opts.heldout.hi; ++i2)
          outcome.holds_on_heldout =
              outcome.holds_on_heldout && check_homomorphism(rel, i1, i2, t, mode).holds;
      report.samples.push_back(outcome);
    }
  }

  return report;
}

ExponentTable solved_table(DeformationMode mode, const SolverOptions& opts) {
  ExponentTable t = paper_table(mode);
  AlgebraContext ctx = builtin_context(mode);
  SolverOptions quiet = opts;
  quiet.samples = 0;
  for (const auto& rel : ctx.relations) {
    SolveReport rep = solve_exponents(rel, mode, quiet);
    for (const auto& [d, g, e] : rep.particular_entries) t.set(d, g, e);
  }
  return t;
}

}  // namespace qsvir
