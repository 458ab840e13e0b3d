#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qsvir/acceptance.hpp"
#include "qsvir/algebra_def.hpp"
#include "qsvir/fock.hpp"
#include "qsvir/reports.hpp"

using namespace qsvir;

namespace {

// Exit code contract: 0 pure pass, 1 verification failure,
// 2 usage/parse error, 3 I/O error.
constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

IndexRange parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw UsageFailure("range must look like -1..4, got '" + s + "'");
  try {
    IndexRange r{std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
    if (!r.valid()) throw UsageFailure("empty range '" + s + "'");
    return r;
  } catch (const UsageFailure&) {
    throw;
  } catch (...) {
    throw UsageFailure("range must look like -1..4, got '" + s + "'");
  }
}

Rational parse_rational_arg(const std::string& s, const char* flag) {
  try {
    return Rational(s);
  } catch (...) {
    throw UsageFailure(std::string(flag) + " expects an integer or n/d fraction");
  }
}

DeformationMode mode_arg(const std::string& s) {
  auto m = parse_mode(s);
  if (!m) throw UsageFailure("unknown mode '" + s + "' (classical, q or pq)");
  return *m;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_report(const Json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoFailure("cannot write " + out_path);
  out << text;
  if (!out) throw IoFailure("write failed for " + out_path);
}

AlgebraContext load_context(const std::string& algebra_file, DeformationMode mode) {
  if (algebra_file.empty()) return builtin_context(mode);
  return parse_algebra_def(slurp(algebra_file)).context();
}

std::string default_data_dir() {
#ifdef QSVIR_DATA_DIR
  return QSVIR_DATA_DIR;
#else
  return "data";
#endif
}

std::string self_path() {
  std::error_code ec;
  auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
  return ec ? std::string() : p.string();
}

int cmd_verify(const std::string& algebra, const std::string& mode_str,
               const std::string& l_range, const std::string& k_range,
               const std::string& families_csv, const std::string& out) {
  AlgebraContext ctx = load_context(algebra, mode_arg(mode_str));
  std::vector<std::string> families =
      families_csv.empty() ? all_family_ids(ctx) : split_csv(families_csv);
  SweepReport rep = sweep(ctx, families, parse_range(l_range), parse_range(k_range));
  write_report(sweep_report_json(rep), out);
  return rep.summary.fail == 0 ? kExitPass : kExitVerificationFailure;
}

int cmd_classical_limit(const std::string& mode_str, const std::string& l_range,
                        const std::string& k_range, const std::string& out) {
  DeformationMode mode = mode_arg(mode_str);
  if (mode == DeformationMode::Classical)
    throw UsageFailure("classical-limit expects a deformed mode (q or pq)");
  SweepReport rep =
      classical_limit_check(builtin_context(mode), parse_range(l_range), parse_range(k_range));
  write_report(sweep_report_json(rep), out);
  return rep.summary.fail == 0 ? kExitPass : kExitVerificationFailure;
}

int cmd_hopf(bool axioms, bool homomorphism, const std::string& mode_str,
             const std::string& indices, const std::string& l_range,
             const std::string& k_range, const std::string& table_source,
             const std::string& families_csv, const std::string& out) {
  if (!axioms && !homomorphism) axioms = homomorphism = true;
  DeformationMode mode = mode_arg(mode_str);
  if (mode == DeformationMode::Classical)
    throw UsageFailure("hopf expects a deformed mode (q or pq)");
  if (table_source != "paper" && table_source != "solved")
    throw UsageFailure("--table must be paper or solved");
  ExponentTable table = table_source == "paper" ? paper_table(mode) : solved_table(mode);

  bool failure = false;
  std::vector<AxiomRow> axiom_rows;
  if (axioms) {
    IndexRange r = parse_range(indices);
    for (ExtFamily f :
         {ExtFamily::L, ExtFamily::G, ExtFamily::F, ExtFamily::T, ExtFamily::K, ExtFamily::R}) {
      for (long long i = r.lo; i <= r.hi; ++i) {
        AxiomRow row{name(f), i, check_axioms(ExtLetter{f, i}, table)};
        failure = failure || !row.result.all();
        axiom_rows.push_back(std::move(row));
      }
    }
  }

  AlgebraContext ctx = builtin_context(mode);
  std::vector<std::string> families =
      families_csv.empty() ? all_family_ids(ctx) : split_csv(families_csv);
  std::vector<HomomorphismRow> hom_rows;
  std::vector<SolveReport> solver_reports;
  if (homomorphism) {
    IndexRange rl = parse_range(l_range), rk = parse_range(k_range);
    for (const auto& fam : families) {
      const RelationDef* rel = ctx.find_relation(fam);
      if (!rel) throw UsageFailure("unknown relation family " + fam);
      for (long long a = rl.lo; a <= rl.hi; ++a) {
        for (long long b = rk.lo; b <= rk.hi; ++b) {
          HomomorphismResult res = check_homomorphism(*rel, a, b, table, mode);
          failure = failure || !res.holds;
          hom_rows.push_back(HomomorphismRow{fam, a, b, res.holds, res.residual_text});
        }
      }
      solver_reports.push_back(solve_exponents(*rel, mode));
    }
  }
  write_report(hopf_report_json(table_source, axiom_rows, hom_rows, solver_reports), out);
  return failure ? kExitVerificationFailure : kExitPass;
}

int cmd_solve(const std::string& mode_str, const std::string& families_csv,
              const std::string& out) {
  DeformationMode mode = mode_arg(mode_str);
  if (mode == DeformationMode::Classical)
    throw UsageFailure("solve-exponents expects a deformed mode (q or pq)");
  AlgebraContext ctx = builtin_context(mode);
  std::vector<std::string> families =
      families_csv.empty() ? all_family_ids(ctx) : split_csv(families_csv);
  Json reports = Json::array();
  bool sample_failure = false;
  for (const auto& fam : families) {
    const RelationDef* rel = ctx.find_relation(fam);
    if (!rel) throw UsageFailure("unknown relation family " + fam);
    SolveReport rep = solve_exponents(*rel, mode);
    sample_failure = sample_failure || (rep.solvable && !rep.all_samples_hold());
    reports.push_back(solve_report_json(rep));
  }
  write_report(Json{{"mode", name(mode)}, {"solver", std::move(reports)}}, out);
  return sample_failure ? kExitVerificationFailure : kExitPass;
}

int cmd_fock(const std::string& algebra, const std::string& mode_str, const std::string& q_str,
             const std::string& p_str, int truncation, int margin, const std::string& l_range,
             const std::string& k_range, const std::string& out) {
  AlgebraContext ctx = load_context(algebra, mode_arg(mode_str));
  SampleParams params{parse_rational_arg(q_str, "--q"), parse_rational_arg(p_str, "--p"),
                      truncation, margin};
  params.validate(ctx.mode);

  bool fidelity_ok = true;
  for (const auto& [pair, rhs] : ctx.rules.rules()) {
    Element lhs{Word{pair.first, pair.second}};
    for (int n = 0; n + 1 <= params.truncation && fidelity_ok; ++n)
      for (int eps = 0; eps <= 1; ++eps) {
        FockVector ket = FockVector::basis(n, eps, params.truncation);
        fidelity_ok = fidelity_ok && (apply_element(lhs, ket, params, ctx.mode) ==
                                      apply_element(rhs, ket, params, ctx.mode));
      }
  }

  IndexRange rl = parse_range(l_range), rk = parse_range(k_range);
  std::vector<FockRow> rows;
  bool mismatch = false;
  for (const auto& rel : ctx.relations) {
    for (long long a = rl.lo; a <= rl.hi; ++a) {
      for (long long b = rk.lo; b <= rk.hi; ++b) {
        FockRow row{rel.id, a, b, false, false};
        if (!relation_admissible(ctx, rel, a, b)) {
          row.skipped = true;
        } else {
          row.agrees = crosscheck(realize_side(ctx, rel, rel.lhs, a, b),
                                  realize_side(ctx, rel, rel.rhs, a, b), params, ctx.mode);
          bool symbolic = check_relation(ctx, rel, a, b).holds;
          mismatch = mismatch || (row.agrees != symbolic);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  write_report(fock_report_json(name(ctx.mode), params, fidelity_ok, rows), out);
  return (fidelity_ok && !mismatch) ? kExitPass : kExitVerificationFailure;
}

int cmd_parse_check(const std::string& file, const std::string& out) {
  std::string text = slurp(file);
  Json report;
  int code = kExitPass;
  try {
    AlgebraDef def = parse_algebra_def(text);
    AlgebraDef reparsed = parse_algebra_def(render_algebra_def(def));
    bool fixed_point = reparsed == def;
    report = Json{{"file", file},
                  {"ok", true},
                  {"mode", name(def.mode)},
                  {"generators", def.generators.size()},
                  {"rules", def.rules.size()},
                  {"realizations", def.realizations.size()},
                  {"relations", def.relations.size()},
                  {"roundtrip_fixed_point", fixed_point}};
    if (!fixed_point) code = kExitVerificationFailure;
  } catch (const ParseError& e) {
    report = Json{{"file", file},
                  {"ok", false},
                  {"error", Json{{"line", e.line}, {"col", e.col}, {"message", e.what()}}}};
    code = kExitUsage;
  }
  write_report(report, out);
  return code;
}

int cmd_acceptance(const std::string& data_dir, const std::string& out) {
  AcceptanceOptions opts;
  opts.data_dir = data_dir;
  opts.cli_path = self_path();
  std::vector<CriterionResult> results = run_acceptance(opts);
  Json jr = Json::array();
  for (const auto& r : results) {
    std::cout << format_criterion_line(r) << "\n";
    jr.push_back(Json{{"number", r.number},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
  }
  if (!out.empty()) write_report(Json{{"criteria", std::move(jr)}}, out);
  return all_pass(results) ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qsvir: exact verification of deformed super Virasoro relations,\n"
      "their oscillator realizations, and the extended Hopf structure"};
  app.require_subcommand(0, 1);

  std::string algebra, out, families;
  std::string mode = "q", l_range = "-1..6", k_range = "-1..6";
  std::string indices = "-3..3", table = "paper";
  std::string q_str = "3/2", p_str = "5/7";
  int truncation = 12, margin = 8;
  std::string parse_file;
  std::string data_dir = default_data_dir();
  bool axioms = false, homomorphism = false;

  auto* verify = app.add_subcommand("verify", "check relation families by exact normal ordering");
  verify->add_option("--mode", mode, "classical, q or pq");
  verify->add_option("--algebra", algebra, "algebra definition file (overrides --mode)");
  verify->add_option("--l-range", l_range, "first index range, e.g. -1..6");
  verify->add_option("--k-range", k_range, "second index range");
  verify->add_option("--families", families, "comma-separated family ids");
  verify->add_option("--out", out, "report path (stdout when absent)");

  auto* climit = app.add_subcommand("classical-limit", "check the q=p=1 limit of the relations");
  climit->add_option("--mode", mode, "q or pq");
  climit->add_option("--l-range", l_range, "first index range");
  climit->add_option("--k-range", k_range, "second index range");
  climit->add_option("--out", out, "report path");

  auto* hopf = app.add_subcommand("hopf", "check Hopf axioms and coproduct homomorphism");
  hopf->add_flag("--axioms", axioms, "check coassociativity, counit, antipode");
  hopf->add_flag("--homomorphism", homomorphism, "check the coproduct against the relations");
  hopf->add_option("--mode", mode, "q or pq");
  hopf->add_option("--indices", indices, "letter index range for the axioms");
  hopf->add_option("--l-range", l_range, "homomorphism first index range")->default_val("-1..4");
  hopf->add_option("--k-range", k_range, "homomorphism second index range")->default_val("-1..4");
  hopf->add_option("--table", table, "exchange exponents: paper or solved");
  hopf->add_option("--families", families, "comma-separated family ids");
  hopf->add_option("--out", out, "report path");

  auto* solve = app.add_subcommand("solve-exponents",
                                   "derive exchange exponents consistent with a relation family");
  solve->add_option("--mode", mode, "q or pq");
  solve->add_option("--families", families, "comma-separated family ids");
  solve->add_option("--out", out, "report path");

  auto* fock = app.add_subcommand("fock", "re-verify relations on the truncated Fock space");
  fock->add_option("--mode", mode, "classical, q or pq");
  fock->add_option("--algebra", algebra, "algebra definition file (overrides --mode)");
  fock->add_option("--q", q_str, "sample value of q (rational, not 0 or +-1)");
  fock->add_option("--p", p_str, "sample value of p (rational, nonzero)");
  fock->add_option("--truncation", truncation, "Fock cutoff N");
  fock->add_option("--margin", margin, "kets up to N - margin are compared");
  fock->add_option("--l-range", l_range, "first index range");
  fock->add_option("--k-range", k_range, "second index range");
  fock->add_option("--out", out, "report path");

  auto* pcheck = app.add_subcommand("parse-check", "parse an algebra definition file");
  pcheck->add_option("file", parse_file, "algebra definition file")->required();
  pcheck->add_option("--out", out, "report path");

  app.add_option("--data-dir", data_dir, "bundled corpus directory (default run only)");
  app.add_option("--out", out, "acceptance report path (default run only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(algebra, mode, l_range, k_range, families, out);
    if (climit->parsed()) return cmd_classical_limit(mode, l_range, k_range, out);
    if (hopf->parsed())
      return cmd_hopf(axioms, homomorphism, mode, indices, l_range, k_range, table, families,
                      out);
    if (solve->parsed()) return cmd_solve(mode, families, out);
    if (fock->parsed())
      return cmd_fock(algebra, mode, q_str, p_str, truncation, margin, l_range, k_range, out);
    if (pcheck->parsed()) return cmd_parse_check(parse_file, out);
    return cmd_acceptance(data_dir, out);
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoFailure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}
