#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "qsvir/templates.hpp"

namespace qsvir {

/// Parse failure with a 1-based source position.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

/// A parsed algebra definition file. The line-oriented grammar:
///
///   # comment
///   mode <classical|q|pq>
///   generator <a+|a-|f+|f-> degree <0|1>
///   rule: <letter> <letter> -> <element-expr>
///   realize <L|G|F>[<var>]: <scalar-factors> <letter-powers>
///   relation <ID>(<v1>,<v2>): <expr> = <expr>
///
/// Scalar factors: integer or rational literals, q^(<int-linear-expr>),
/// p^(...), [expr] (the q-integer), [[expr]] (the box q-integer),
/// lambda, (expr) as an integer coefficient, or a bare index variable.
/// Words are juxtaposed letters; letter powers take ^(expr).
struct AlgebraDef {
  DeformationMode mode = DeformationMode::Q;
  std::vector<std::pair<GenSym, int>> generators;
  std::vector<std::tuple<GenSym, GenSym, Element>> rules;
  std::vector<std::pair<char, GeneratorRealization>> realizations;
  std::vector<RelationDef> relations;

  bool operator==(const AlgebraDef&) const = default;

  /// Assembles the verification context (validates rule orientation).
  AlgebraContext context() const;
};

/// Parses the text format, reporting malformed input with positions.
AlgebraDef parse_algebra_def(const std::string& text);

/// Canonical text rendering; parse(render(parse(t))) == parse(t).
std::string render_algebra_def(const AlgebraDef& def);

}  // namespace qsvir
