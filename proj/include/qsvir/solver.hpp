#pragma once

#include "qsvir/hopf.hpp"
#include "qsvir/relations.hpp"

namespace qsvir {

struct SolverOptions {
  IndexRange grid{-1, 4};     // where constraints are collected
  IndexRange heldout{5, 8};   // where sampled tables are re-verified
  int samples = 3;
  unsigned seed = 0x5eed;
};

struct SampleOutcome {
  std::string description;
  bool holds_on_heldout = false;
};

/// Result of deriving the exchange exponents consistent with one
/// relation family. The coproduct homomorphism condition is expanded
/// over the grid with bilinear ansatz exponents; monomials that must
/// cancel yield linear equations over the ansatz coefficients.
/// Obstructions are leftover terms no exponent choice can cancel.
struct SolveReport {
  std::string family;
  std::string mode;
  std::vector<std::string> unknowns;
  std::vector<std::string> constraint_rows;
  std::vector<std::string> obstructions;
  bool solvable = false;
  bool paper_member = false;
  long long solution_dimension = 0;
  std::vector<SampleOutcome> samples;

  /// Canonical member of the solution set (free coefficients zero),
  /// empty when not solvable.
  std::vector<std::tuple<ExtFamily, ExtFamily, ExchangeExponents>> particular_entries;

  bool all_samples_hold() const {
    for (const auto& s : samples)
      if (!s.holds_on_heldout) return false;
    return true;
  }
};

/// Derives the affine solution set of exchange exponents under which the
/// coproduct respects the given relation family, tests the published
/// table for membership, and re-verifies sampled member tables on the
/// held-out grid.
SolveReport solve_exponents(const RelationDef& rel, DeformationMode mode,
                            const SolverOptions& opts = {});

/// The exponent table with every solvable family's entries replaced by a
/// solver solution; entries of families without a bilinear solution keep
/// the published values.
ExponentTable solved_table(DeformationMode mode, const SolverOptions& opts = {});

}  // namespace qsvir
