// Acceptance suite: runs every criterion at its pinned parameters and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <iostream>

#include "qsvir/acceptance.hpp"

int main() {
  qsvir::AcceptanceOptions opts;
  opts.data_dir = QSVIR_DATA_DIR;
#ifdef QSVIR_CLI_PATH
  opts.cli_path = QSVIR_CLI_PATH;
#endif
  auto results = qsvir::run_acceptance(opts);
  for (const auto& r : results) std::cout << qsvir::format_criterion_line(r) << "\n";
  bool ok = qsvir::all_pass(results);
  std::cout << (ok ? "acceptance: all criteria PASS" : "acceptance: FAIL") << "\n";
  return ok ? 0 : 1;
}
