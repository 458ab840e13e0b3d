#include "qsvir/relations.hpp"

#include <chrono>

namespace qsvir {

namespace {

std::map<std::string, long long> bind(const RelationDef& rel, long long i1, long long i2) {
  return {{rel.var1, i1}, {rel.var2, i2}};
}

Element instantiate_side(const AlgebraContext& ctx, const std::vector<RelationTerm>& side,
                         const std::map<std::string, long long>& a) {
  Element out;
  for (const auto& t : side) {
    Element prod = Element::unit();
    for (const auto& ref : t.gens)
      prod = prod * ctx.realization(ref.family).instantiate(ref.index.eval(a));
    out += t.scalar.eval(a) * prod;
  }
  return out;
}

/// Coefficients of x evaluated at q = p = 1.
Element limit_at_one(const Element& x) {
  Element out;
  for (const auto& [w, c] : x.terms())
    out.add_term(w, LaurentPoly(c.eval(Rational(1), Rational(1))));
  return out;
}

Element instantiate_side_limit(const AlgebraContext& ctx, const std::vector<RelationTerm>& side,
                               const std::map<std::string, long long>& a) {
  Element out;
  for (const auto& t : side) {
    Element prod = Element::unit();
    for (const auto& ref : t.gens)
      prod = prod * limit_at_one(ctx.realization(ref.family).instantiate(ref.index.eval(a)));
    LaurentPoly scalar(t.scalar.eval(a).eval(Rational(1), Rational(1)));
    out += scalar * prod;
  }
  return out;
}

long long elapsed_micros(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

Element realize_side(const AlgebraContext& ctx, const RelationDef& rel,
                     const std::vector<RelationTerm>& side, long long i1, long long i2) {
  return instantiate_side(ctx, side, bind(rel, i1, i2));
}

std::vector<std::string> all_family_ids(const AlgebraContext& ctx) {
  std::vector<std::string> ids;
  for (const auto& r : ctx.relations) ids.push_back(r.id);
  return ids;
}

bool relation_admissible(const AlgebraContext& ctx, const RelationDef& rel,
                         long long i1, long long i2) {
  auto a = bind(rel, i1, i2);
  for (const auto* side : {&rel.lhs, &rel.rhs})
    for (const auto& t : *side)
      for (const auto& ref : t.gens)
        if (!ctx.realization(ref.family).admissible(ref.index.eval(a))) return false;
  return true;
}

Residual check_relation(const AlgebraContext& ctx, const RelationDef& rel,
                        long long i1, long long i2) {
  if (!relation_admissible(ctx, rel, i1, i2))
    throw unsupported_index_error("relation " + rel.id + " not realizable at (" +
                                  std::to_string(i1) + ", " + std::to_string(i2) + ")");
  auto a = bind(rel, i1, i2);
  Element diff = instantiate_side(ctx, rel.lhs, a) - instantiate_side(ctx, rel.rhs, a);
  Element value = normal_order(diff, ctx.rules);
  return Residual{value, value.is_zero()};
}

SweepReport sweep(const AlgebraContext& ctx, const std::vector<std::string>& family_ids,
                  IndexRange r1, IndexRange r2) {
  if (!r1.valid() || !r2.valid())
    throw std::invalid_argument("sweep: empty index range");
  SweepReport report;
  report.mode = name(ctx.mode);
  // An empty family set is vacuous: the report comes back empty.
  std::vector<const RelationDef*> selected;
  for (const auto& id : family_ids) {
    const RelationDef* r = ctx.find_relation(id);
    if (!r) throw std::invalid_argument("sweep: unknown relation family " + id);
    selected.push_back(r);
  }
  for (const RelationDef* rel : selected) {
    FamilyResults fr;
    fr.id = rel->id;
    for (long long i1 = r1.lo; i1 <= r1.hi; ++i1) {
      for (long long i2 = r2.lo; i2 <= r2.hi; ++i2) {
        InstanceResult inst;
        inst.i1 = i1;
        inst.i2 = i2;
        if (!relation_admissible(ctx, *rel, i1, i2)) {
          inst.status = InstanceStatus::Skipped;
          report.summary.skipped++;
        } else {
          auto t0 = std::chrono::steady_clock::now();
          Residual res = check_relation(ctx, *rel, i1, i2);
          inst.micros = elapsed_micros(t0);
          inst.terms = res.value.term_count();
          inst.residual_text = res.value.str();
          inst.status = res.holds ? InstanceStatus::Pass : InstanceStatus::Fail;
          (res.holds ? report.summary.pass : report.summary.fail)++;
        }
        fr.instances.push_back(std::move(inst));
      }
    }
    report.families.push_back(std::move(fr));
  }
  return report;
}

SweepReport classical_limit_check(const AlgebraContext& deformed, IndexRange r1,
                                  IndexRange r2) {
  AlgebraContext classical = builtin_context(DeformationMode::Classical);
  SweepReport report;
  report.mode = std::string(name(deformed.mode)) + "->classical";
  for (const auto& rel : deformed.relations) {
    const RelationDef* crel = classical.find_relation(rel.id);
    FamilyResults fr;
    fr.id = rel.id;
    for (long long i1 = r1.lo; i1 <= r1.hi; ++i1) {
      for (long long i2 = r2.lo; i2 <= r2.hi; ++i2) {
        InstanceResult inst;
        inst.i1 = i1;
        inst.i2 = i2;
        if (!relation_admissible(deformed, rel, i1, i2)) {
          inst.status = InstanceStatus::Skipped;
          report.summary.skipped++;
          fr.instances.push_back(std::move(inst));
          continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        auto a = bind(rel, i1, i2);
        Element limit_diff = instantiate_side_limit(deformed, rel.lhs, a) -
                             instantiate_side_limit(deformed, rel.rhs, a);
        // The limit instance must agree with the classical relation
        // instance as a free-algebra element, not just after reduction.
        bool matches_classical = true;
        if (crel) {
          auto ca = bind(*crel, i1, i2);
          Element classical_diff = instantiate_side(classical, crel->lhs, ca) -
                                   instantiate_side(classical, crel->rhs, ca);
          matches_classical = (limit_diff == classical_diff);
        }
        Element residual = normal_order(limit_diff, classical.rules);
        inst.micros = elapsed_micros(t0);
        inst.terms = residual.term_count();
        inst.residual_text = residual.str();
        bool ok = matches_classical && residual.is_zero();
        inst.status = ok ? InstanceStatus::Pass : InstanceStatus::Fail;
        (ok ? report.summary.pass : report.summary.fail)++;
        fr.instances.push_back(std::move(inst));
      }
    }
    report.families.push_back(std::move(fr));
  }
  return report;
}

}  // namespace qsvir
