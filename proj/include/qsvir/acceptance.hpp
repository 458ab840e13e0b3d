#pragma once

#include <string>
#include <vector>

namespace qsvir {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::string data_dir;  // bundled .alg corpus and schemas
  std::string cli_path;  // verification binary for the exit-code control; may be empty
};

/// Runs the eight acceptance criteria at their pinned parameters:
///   1. one-parameter relation sweep, grid [-1..6], < 10 s
///   2. two-parameter relation sweep, same grid, < 15 s
///   3. classical limit on the same grid
///   4. Fock oracle agreement (q=3/2, p=5/7, N=12, d=8) plus exact
///      representation fidelity on every ket up to n = 11, < 30 s
///   5. Hopf axioms for every letter family, indices [-3..3]
///   6. coproduct homomorphism for LL, GG and the FF diagonal on
///      [-1..4] under the published table, plus solver membership
///   7. solver soundness on the held-out grid [5..8] and flagging of the
///      garbled published rows
///   8. 200 randomized-order confluence checks per mode and the
///      corrupted-corpus negative control (exit code 1, residual shown)
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

bool all_pass(const std::vector<CriterionResult>& results);

/// One line per criterion, e.g. "criterion 3: PASS  classical limit ...".
std::string format_criterion_line(const CriterionResult& r);

}  // namespace qsvir
