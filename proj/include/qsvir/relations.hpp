#pragma once

#include <string>
#include <vector>

#include "qsvir/templates.hpp"

namespace qsvir {

/// Inclusive integer interval.
struct IndexRange {
  long long lo = 0;
  long long hi = 0;
  bool valid() const { return lo <= hi; }
  long long size() const { return hi - lo + 1; }
};

/// Exact leftover of one relation instance after realization and normal
/// ordering; the relation holds iff the value has no terms.
struct Residual {
  Element value;
  bool holds = false;
};

enum class InstanceStatus { Pass, Fail, Skipped };

inline const char* name(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::Pass: return "PASS";
    case InstanceStatus::Fail: return "FAIL";
    case InstanceStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

struct InstanceResult {
  long long i1 = 0;
  long long i2 = 0;
  InstanceStatus status = InstanceStatus::Skipped;
  std::string residual_text;
  std::size_t terms = 0;
  long long micros = 0;
};

struct FamilyResults {
  std::string id;
  std::vector<InstanceResult> instances;
};

struct SweepSummary {
  long long pass = 0;
  long long fail = 0;
  long long skipped = 0;
};

struct SweepReport {
  std::string mode;
  std::vector<FamilyResults> families;
  SweepSummary summary;
};

/// True when every generator occurring on either side (including sum
/// indices) is realizable at the instance's indices.
bool relation_admissible(const AlgebraContext& ctx, const RelationDef& rel,
                         long long i1, long long i2);

/// One side of a relation instance pushed through the realization.
Element realize_side(const AlgebraContext& ctx, const RelationDef& rel,
                     const std::vector<RelationTerm>& side, long long i1, long long i2);

/// Instantiates both sides through the realization, normal-orders the
/// difference and returns the exact residual. Inadmissible indices throw
/// unsupported_index_error.
Residual check_relation(const AlgebraContext& ctx, const RelationDef& rel,
                        long long i1, long long i2);

/// Runs check_relation over the full index grid for the selected
/// families (an empty selection gives an empty report). Inadmissible
/// grid points are reported as SKIPPED, never as PASS.
SweepReport sweep(const AlgebraContext& ctx, const std::vector<std::string>& family_ids,
                  IndexRange r1, IndexRange r2);

/// The family ids of a context, in declaration order.
std::vector<std::string> all_family_ids(const AlgebraContext& ctx);

/// Verifies the classical limit: every relation instance of the deformed
/// context, with all scalar coefficients and realization coefficients
/// evaluated at q = p = 1, must coincide term-for-term with the
/// classical relation instance and reduce to zero under the classical
/// rewrite rules.
SweepReport classical_limit_check(const AlgebraContext& deformed, IndexRange r1,
                                  IndexRange r2);

}  // namespace qsvir
