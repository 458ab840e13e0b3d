#pragma once

#include <json.hpp>

#include "qsvir/fock.hpp"
#include "qsvir/relations.hpp"
#include "qsvir/solver.hpp"

namespace qsvir {

using Json = nlohmann::json;

/// {mode, families:[{id, instances:[{l,k,status,residual_text,terms,micros}]}],
///  summary:{pass,fail,skipped}}
Json sweep_report_json(const SweepReport& report);

struct AxiomRow {
  std::string family;
  long long index = 0;
  AxiomResult result;
};

struct HomomorphismRow {
  std::string family;
  long long l = 0;
  long long k = 0;
  bool holds = false;
  std::string residual_text;
};

/// {table_source, axiom_results:[...], homomorphism_results:[...],
///  solver:[...]}
Json hopf_report_json(const std::string& table_source, const std::vector<AxiomRow>& axioms,
                      const std::vector<HomomorphismRow>& homs,
                      const std::vector<SolveReport>& solver);

Json solve_report_json(const SolveReport& report);

struct FockRow {
  std::string relation;
  long long l = 0;
  long long k = 0;
  bool agrees = false;
  bool skipped = false;
};

/// {mode, q_val, p_val, N, margin, fidelity_ok, rows:[{relation,l,k,
///  q_val,p_val,N,agrees}], summary:{agree,disagree,skipped}}
Json fock_report_json(const std::string& mode, const SampleParams& params, bool fidelity_ok,
                      const std::vector<FockRow>& rows);

/// Structural JSON-schema validation for the subset used by the bundled
/// schemas: type, properties, required, additionalProperties (boolean),
/// items, enum. On failure, writes a diagnostic into `error`.
bool validate_schema(const Json& schema, const Json& doc, std::string* error);

}  // namespace qsvir
