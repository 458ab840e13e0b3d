#include "qsvir/reports.hpp"

namespace qsvir {

Json sweep_report_json(const SweepReport& report) {
  Json families = Json::array();
  for (const auto& fam : report.families) {
    Json instances = Json::array();
    for (const auto& inst : fam.instances) {
      Json j{{"l", inst.i1},
             {"k", inst.i2},
             {"status", name(inst.status)},
             {"residual_text", inst.residual_text},
             {"terms", inst.terms},
             {"micros", inst.micros}};
      instances.push_back(std::move(j));
    }
    families.push_back(Json{{"id", fam.id}, {"instances", std::move(instances)}});
  }
  return Json{{"mode", report.mode},
              {"families", std::move(families)},
              {"summary",
               Json{{"pass", report.summary.pass},
                    {"fail", report.summary.fail},
                    {"skipped", report.summary.skipped}}}};
}

Json solve_report_json(const SolveReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples)
    samples.push_back(Json{{"table", s.description}, {"holds_on_heldout", s.holds_on_heldout}});
  return Json{{"family", report.family},
              {"mode", report.mode},
              {"unknowns", report.unknowns},
              {"constraint_rows", report.constraint_rows},
              {"obstructions", report.obstructions},
              {"solvable", report.solvable},
              {"paper_member", report.paper_member},
              {"solution_dimension", report.solution_dimension},
              {"samples", std::move(samples)}};
}

Json hopf_report_json(const std::string& table_source, const std::vector<AxiomRow>& axioms,
                      const std::vector<HomomorphismRow>& homs,
                      const std::vector<SolveReport>& solver) {
  Json axiom_results = Json::array();
  for (const auto& row : axioms) {
    axiom_results.push_back(Json{{"family", row.family},
                                 {"index", row.index},
                                 {"coassoc", row.result.coassoc},
                                 {"counit", row.result.counit},
                                 {"antipode", row.result.antipode}});
  }
  Json hom_results = Json::array();
  for (const auto& row : homs) {
    hom_results.push_back(Json{{"family", row.family},
                               {"l", row.l},
                               {"k", row.k},
                               {"holds", row.holds},
                               {"residual_text", row.residual_text}});
  }
  Json solver_json = Json::array();
  for (const auto& rep : solver) solver_json.push_back(solve_report_json(rep));
  return Json{{"table_source", table_source},
              {"axiom_results", std::move(axiom_results)},
              {"homomorphism_results", std::move(hom_results)},
              {"solver", std::move(solver_json)}};
}

Json fock_report_json(const std::string& mode, const SampleParams& params, bool fidelity_ok,
                      const std::vector<FockRow>& rows) {
  Json jrows = Json::array();
  long long agree = 0, disagree = 0, skipped = 0;
  for (const auto& row : rows) {
    if (row.skipped)
      ++skipped;
    else
      (row.agrees ? agree : disagree)++;
    jrows.push_back(Json{{"relation", row.relation},
                         {"l", row.l},
                         {"k", row.k},
                         {"q_val", params.q_val.str()},
                         {"p_val", params.p_val.str()},
                         {"N", params.truncation},
                         {"agrees", row.agrees},
                         {"skipped", row.skipped}});
  }
  return Json{{"mode", mode},
              {"q_val", params.q_val.str()},
              {"p_val", params.p_val.str()},
              {"N", params.truncation},
              {"margin", params.margin},
              {"fidelity_ok", fidelity_ok},
              {"rows", std::move(jrows)},
              {"summary", Json{{"agree", agree}, {"disagree", disagree}, {"skipped", skipped}}}};
}

namespace {

bool type_matches(const std::string& type, const Json& doc) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

bool validate_at(const Json& schema, const Json& doc, const std::string& path,
                 std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = path + ": " + msg;
    return false;
  };
  if (schema.contains("type")) {
    const std::string type = schema["type"].get<std::string>();
    if (!type_matches(type, doc)) return fail("expected " + type);
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"]) found = found || v == doc;
    if (!found) return fail("value not in enum");
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    }
    const Json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    bool extra_ok = !schema.contains("additionalProperties") ||
                    schema["additionalProperties"].get<bool>();
    for (const auto& [key, value] : doc.items()) {
      if (props && props->contains(key)) {
        if (!validate_at((*props)[key], value, path + "/" + key, error)) return false;
      } else if (!extra_ok) {
        return fail("unexpected key " + key);
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i)
      if (!validate_at(schema["items"], doc[i], path + "/" + std::to_string(i), error))
        return false;
  }
  return true;
}

}  // namespace

bool validate_schema(const Json& schema, const Json& doc, std::string* error) {
  return validate_at(schema, doc, "$", error);
}

}  // namespace qsvir
