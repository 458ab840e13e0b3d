#include "qsvir/algebra_def.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace qsvir {

namespace {

struct Token {
  enum class Kind { Ident, Number, Sym };
  Kind kind;
  std::string text;
  int col;  // 1-based
};

std::optional<GenSym> letter_by_name(const std::string& s) {
  if (s == "a+") return GenSym::BosonRaise;
  if (s == "a-") return GenSym::BosonLower;
  if (s == "f+") return GenSym::FermiRaise;
  if (s == "f-") return GenSym::FermiLower;
  return std::nullopt;
}

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])))) ++j;
      std::string text = line.substr(i, j - i);
      // Oscillator letters carry their sign: a+, a-, f+, f-.
      if ((text == "a" || text == "f") && j < line.size() &&
          (line[j] == '+' || line[j] == '-')) {
        text += line[j];
        ++j;
      }
      out.push_back({Token::Kind::Ident, text, col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Kind::Number, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Kind::Sym, "->", col});
      i += 2;
      continue;
    }
    if (c == '[' && i + 1 < line.size() && line[i + 1] == '[') {
      out.push_back({Token::Kind::Sym, "[[", col});
      i += 2;
      continue;
    }
    if (c == ']' && i + 1 < line.size() && line[i + 1] == ']') {
      out.push_back({Token::Kind::Sym, "]]", col});
      i += 2;
      continue;
    }
    static const std::string singles = "+-^()[]:,=*/";
    if (singles.find(c) != std::string::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, c), col});
      ++i;
      continue;
    }
    throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
  }
  return out;
}

/// Cursor over one line of tokens.
struct Cursor {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  int lineno;
  int end_col;

  bool done() const { return pos >= toks.size(); }
  const Token& peek() const {
    if (done()) throw ParseError(lineno, end_col, "unexpected end of line");
    return toks[pos];
  }
  Token take() {
    const Token& t = peek();
    ++pos;
    return t;
  }
  bool is_sym(const char* s) const {
    return !done() && toks[pos].kind == Token::Kind::Sym && toks[pos].text == s;
  }
  void expect_sym(const char* s) {
    if (!is_sym(s))
      throw ParseError(lineno, done() ? end_col : peek().col, std::string("expected '") + s + "'");
    ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(lineno, done() ? end_col : toks[pos].col, msg);
  }
};

long long to_int(const Token& t, const Cursor& c) {
  try {
    return std::stoll(t.text);
  } catch (...) {
    c.fail("number out of range");
  }
}

/// Integer-linear expression over the variables in scope, e.g. l-k, 2k+1.
LinExpr parse_linexpr(Cursor& c, const std::set<std::string>& vars) {
  LinExpr expr;
  bool first = true;
  while (true) {
    long long sign = 1;
    if (c.is_sym("+")) {
      c.take();
    } else if (c.is_sym("-")) {
      sign = -1;
      c.take();
    } else if (!first) {
      break;
    }
    if (c.done()) c.fail("expected term in index expression");
    const Token& t = c.peek();
    if (t.kind == Token::Kind::Number) {
      long long n = sign * to_int(c.take(), c);
      if (c.is_sym("*")) c.take();
      if (!c.done() && c.peek().kind == Token::Kind::Ident && vars.count(c.peek().text)) {
        expr += LinExpr::var(c.take().text, n);
      } else {
        expr += LinExpr::lit(n);
      }
    } else if (t.kind == Token::Kind::Ident && vars.count(t.text)) {
      expr += LinExpr::var(c.take().text, sign);
    } else {
      c.fail("expected index variable or integer");
    }
    first = false;
    if (c.done() || !(c.is_sym("+") || c.is_sym("-"))) break;
  }
  return expr;
}

Rational parse_rational(Cursor& c) {
  long long num = to_int(c.take(), c);
  if (c.is_sym("/")) {
    c.take();
    if (c.done() || c.peek().kind != Token::Kind::Number) c.fail("expected denominator");
    long long den = to_int(c.take(), c);
    if (den == 0) c.fail("zero denominator");
    return Rational(static_cast<long>(num), static_cast<long>(den));
  }
  return Rational(static_cast<long>(num));
}

/// What a term may contain besides scalar factors.
enum class TermContext { RuleWord, RealizeWord, RelationGens };

struct ParsedTerm {
  ScalarTemplate scalar;
  std::vector<GenSym> letters;                          // RuleWord
  std::vector<std::pair<GenSym, LinExpr>> letter_pows;  // RealizeWord
  std::vector<GenRef> gens;                             // RelationGens
};

ParsedTerm parse_term(Cursor& c, TermContext ctx, const std::set<std::string>& vars,
                      const std::set<GenSym>& declared) {
  ParsedTerm term;
  long long sign = 1;
  while (c.is_sym("+") || c.is_sym("-")) {
    if (c.take().text == "-") sign = -sign;
  }
  bool any = false;
  while (!c.done() && !c.is_sym("+") && !c.is_sym("-") && !c.is_sym("=")) {
    const Token& t = c.peek();
    if (t.kind == Token::Kind::Number) {
      Rational r = parse_rational(c);
      term.scalar.factors.push_back({ScalarFactor::Kind::Const, {}, r});
    } else if (t.kind == Token::Kind::Sym && (t.text == "[" || t.text == "[[")) {
      bool box = t.text == "[[";
      c.take();
      LinExpr e = parse_linexpr(c, vars);
      c.expect_sym(box ? "]]" : "]");
      term.scalar.factors.push_back(
          {box ? ScalarFactor::Kind::QBox : ScalarFactor::Kind::QBracket, e, Rational(1)});
    } else if (t.kind == Token::Kind::Sym && t.text == "(") {
      c.take();
      LinExpr e = parse_linexpr(c, vars);
      c.expect_sym(")");
      term.scalar.factors.push_back({ScalarFactor::Kind::IntExpr, e, Rational(1)});
    } else if (t.kind == Token::Kind::Ident && (t.text == "q" || t.text == "p")) {
      bool is_q = t.text == "q";
      c.take();
      LinExpr e = LinExpr::lit(1);
      if (c.is_sym("^")) {
        c.take();
        c.expect_sym("(");
        e = parse_linexpr(c, vars);
        c.expect_sym(")");
      }
      term.scalar.factors.push_back(
          {is_q ? ScalarFactor::Kind::QPow : ScalarFactor::Kind::PPow, e, Rational(1)});
    } else if (t.kind == Token::Kind::Ident && t.text == "lambda") {
      c.take();
      term.scalar.factors.push_back({ScalarFactor::Kind::Lambda, {}, Rational(1)});
    } else if (t.kind == Token::Kind::Ident && letter_by_name(t.text)) {
      GenSym g = *letter_by_name(t.text);
      if (!declared.count(g)) c.fail("generator " + t.text + " is not declared");
      int col = t.col;
      c.take();
      if (ctx == TermContext::RuleWord) {
        if (c.is_sym("^")) c.fail("rule words take no powers");
        term.letters.push_back(g);
      } else if (ctx == TermContext::RealizeWord) {
        LinExpr e = LinExpr::lit(1);
        if (c.is_sym("^")) {
          c.take();
          c.expect_sym("(");
          e = parse_linexpr(c, vars);
          c.expect_sym(")");
        }
        term.letter_pows.emplace_back(g, e);
      } else {
        throw ParseError(c.lineno, col, "oscillator letters cannot appear in relations");
      }
    } else if (t.kind == Token::Kind::Ident && t.text.size() == 1 &&
               std::isupper(static_cast<unsigned char>(t.text[0]))) {
      if (ctx != TermContext::RelationGens)
        c.fail("indexed generators are only allowed in relations");
      char fam = t.text[0];
      if (fam != 'L' && fam != 'G' && fam != 'F')
        c.fail(std::string("unknown generator family ") + fam);
      c.take();
      c.expect_sym("[");
      LinExpr e = parse_linexpr(c, vars);
      c.expect_sym("]");
      term.gens.push_back(GenRef{fam, e});
    } else if (t.kind == Token::Kind::Ident && vars.count(t.text)) {
      term.scalar.factors.push_back(
          {ScalarFactor::Kind::IntExpr, LinExpr::var(c.take().text), Rational(1)});
    } else {
      c.fail("unknown symbol " + t.text);
    }
    any = true;
  }
  if (!any) c.fail("expected expression");
  if (sign < 0) {
    // Fold the sign into a leading constant so that "-1 q^(1)" and
    // "- q^(1)" parse identically.
    if (!term.scalar.factors.empty() &&
        term.scalar.factors.front().kind == ScalarFactor::Kind::Const) {
      term.scalar.factors.front().value = -term.scalar.factors.front().value;
    } else {
      term.scalar.factors.insert(term.scalar.factors.begin(),
                                 {ScalarFactor::Kind::Const, {}, Rational(-1)});
    }
  }
  return term;
}

std::vector<ParsedTerm> parse_terms(Cursor& c, TermContext ctx,
                                    const std::set<std::string>& vars,
                                    const std::set<GenSym>& declared) {
  // A single literal 0 denotes the empty combination.
  if (!c.done() && c.peek().kind == Token::Kind::Number && c.peek().text == "0" &&
      (c.pos + 1 == c.toks.size() || c.toks[c.pos + 1].text == "=")) {
    c.take();
    return {};
  }
  std::vector<ParsedTerm> out;
  out.push_back(parse_term(c, ctx, vars, declared));
  while (c.is_sym("+") || c.is_sym("-")) out.push_back(parse_term(c, ctx, vars, declared));
  return out;
}

Element term_to_element(const ParsedTerm& t) {
  return Element(Word(t.letters), t.scalar.eval({}));
}

bool reserved_var(const std::string& v) {
  return v == "q" || v == "p" || v == "lambda" || v == "a" || v == "f" ||
         letter_by_name(v).has_value();
}

std::string scalar_factor_str(const ScalarFactor& f) {
  switch (f.kind) {
    case ScalarFactor::Kind::QPow: return "q^(" + f.arg.str() + ")";
    case ScalarFactor::Kind::PPow: return "p^(" + f.arg.str() + ")";
    case ScalarFactor::Kind::QBracket: return "[" + f.arg.str() + "]";
    case ScalarFactor::Kind::QBox: return "[[" + f.arg.str() + "]]";
    case ScalarFactor::Kind::Lambda: return "lambda";
    case ScalarFactor::Kind::Const: return f.value.str();
    case ScalarFactor::Kind::IntExpr: return "(" + f.arg.str() + ")";
  }
  return "?";
}

std::string scalar_template_str(const ScalarTemplate& s) {
  std::string out;
  for (const auto& f : s.factors) {
    if (!out.empty()) out += " ";
    out += scalar_factor_str(f);
  }
  return out;
}

std::string element_str_alg(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, coeff] : e.terms()) {
    for (const auto& [exps, c] : coeff.terms()) {
      if (!first) out += " + ";
      first = false;
      std::string term;
      if (!c.is_one() || (exps.q_exp == 0 && exps.p_exp == 0 && w.empty())) term = c.str();
      if (exps.q_exp != 0)
        term += (term.empty() ? "" : " ") + std::string("q^(") + std::to_string(exps.q_exp) + ")";
      if (exps.p_exp != 0)
        term += (term.empty() ? "" : " ") + std::string("p^(") + std::to_string(exps.p_exp) + ")";
      for (GenSym g : w.letters()) term += (term.empty() ? "" : " ") + std::string(name(g));
      out += term;
    }
  }
  return out;
}

}  // namespace

AlgebraDef parse_algebra_def(const std::string& text) {
  AlgebraDef def;
  bool mode_seen = false;
  std::set<GenSym> declared;
  std::set<std::pair<GenSym, GenSym>> rule_pairs;
  std::set<char> realized;
  std::set<std::string> relation_ids;
  RewriteSystem scratch;  // validates orientation as rules arrive

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = lex_line(line, lineno);
    if (toks.empty()) continue;
    Cursor c{toks, 0, lineno, static_cast<int>(line.size()) + 1};
    Token head = c.take();
    if (head.kind != Token::Kind::Ident)
      throw ParseError(lineno, head.col, "expected a declaration keyword");

    if (head.text == "mode") {
      if (mode_seen) c.fail("duplicate mode declaration");
      if (c.done() || c.peek().kind != Token::Kind::Ident) c.fail("expected mode name");
      Token m = c.take();
      auto mode = parse_mode(m.text);
      if (!mode) throw ParseError(lineno, m.col, "unknown mode " + m.text);
      def.mode = *mode;
      mode_seen = true;
    } else if (head.text == "generator") {
      if (c.done() || c.peek().kind != Token::Kind::Ident) c.fail("expected generator name");
      Token nameTok = c.take();
      auto g = letter_by_name(nameTok.text);
      if (!g) throw ParseError(lineno, nameTok.col, "unknown generator name " + nameTok.text);
      if (declared.count(*g))
        throw ParseError(lineno, nameTok.col, "duplicate generator " + nameTok.text);
      if (c.done() || c.peek().kind != Token::Kind::Ident || c.peek().text != "degree")
        c.fail("expected 'degree'");
      c.take();
      if (c.done() || c.peek().kind != Token::Kind::Number) c.fail("expected 0 or 1");
      Token d = c.take();
      long long deg = to_int(d, c);
      if (deg != 0 && deg != 1) throw ParseError(lineno, d.col, "degree must be 0 or 1");
      if (deg != degree(*g))
        throw ParseError(lineno, d.col,
                         "declared degree disagrees with the parity of " + nameTok.text);
      if (!c.done()) c.fail("trailing tokens after declaration");
      declared.insert(*g);
      def.generators.emplace_back(*g, static_cast<int>(deg));
    } else if (head.text == "rule") {
      c.expect_sym(":");
      auto need_letter = [&]() {
        if (c.done() || c.peek().kind != Token::Kind::Ident) c.fail("expected a generator letter");
        Token t = c.take();
        auto g = letter_by_name(t.text);
        if (!g || !declared.count(*g))
          throw ParseError(lineno, t.col, "unknown or undeclared generator " + t.text);
        return *g;
      };
      GenSym x = need_letter();
      GenSym y = need_letter();
      c.expect_sym("->");
      if (c.done()) c.fail("expected expression after '->'");
      Element rhs;
      for (const auto& t : parse_terms(c, TermContext::RuleWord, {}, declared))
        rhs += term_to_element(t);
      if (!c.done()) c.fail("trailing tokens after rule");
      if (rule_pairs.count({x, y})) c.fail("duplicate rule for this pair");
      try {
        scratch.add_rule(x, y, rhs);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, head.col, e.what());
      }
      rule_pairs.insert({x, y});
      def.rules.emplace_back(x, y, rhs);
    } else if (head.text == "realize") {
      if (c.done() || c.peek().kind != Token::Kind::Ident || c.peek().text.size() != 1)
        c.fail("expected generator family");
      Token famTok = c.take();
      char fam = famTok.text[0];
      if (fam != 'L' && fam != 'G' && fam != 'F')
        throw ParseError(lineno, famTok.col, "unknown generator family " + famTok.text);
      if (realized.count(fam))
        throw ParseError(lineno, famTok.col, std::string("duplicate realization for ") + fam);
      c.expect_sym("[");
      if (c.done() || c.peek().kind != Token::Kind::Ident) c.fail("expected index variable");
      Token varTok = c.take();
      if (reserved_var(varTok.text))
        throw ParseError(lineno, varTok.col, "reserved index variable " + varTok.text);
      c.expect_sym("]");
      c.expect_sym(":");
      if (c.done()) c.fail("expected realization expression");
      auto terms = parse_terms(c, TermContext::RealizeWord, {varTok.text}, declared);
      if (terms.size() != 1) c.fail("realization must be a single term");
      if (!c.done()) c.fail("trailing tokens after realization");
      GeneratorRealization r;
      r.index_var = varTok.text;
      r.coeff = terms[0].scalar;
      r.factors = terms[0].letter_pows;
      realized.insert(fam);
      def.realizations.emplace_back(fam, std::move(r));
    } else if (head.text == "relation") {
      if (c.done() || c.peek().kind != Token::Kind::Ident) c.fail("expected relation id");
      Token idTok = c.take();
      if (relation_ids.count(idTok.text))
        throw ParseError(lineno, idTok.col, "duplicate relation " + idTok.text);
      c.expect_sym("(");
      if (c.done() || c.peek().kind != Token::Kind::Ident) c.fail("expected index variable");
      Token v1 = c.take();
      c.expect_sym(",");
      if (c.done() || c.peek().kind != Token::Kind::Ident) c.fail("expected index variable");
      Token v2 = c.take();
      if (reserved_var(v1.text) || reserved_var(v2.text) || v1.text == v2.text)
        throw ParseError(lineno, v1.col, "bad index variables");
      c.expect_sym(")");
      c.expect_sym(":");
      std::set<std::string> vars{v1.text, v2.text};
      auto lhs_terms = parse_terms(c, TermContext::RelationGens, vars, declared);
      c.expect_sym("=");
      if (c.done()) c.fail("expected right-hand side");
      auto rhs_terms = parse_terms(c, TermContext::RelationGens, vars, declared);
      if (!c.done()) c.fail("trailing tokens after relation");
      RelationDef rel;
      rel.id = idTok.text;
      rel.var1 = v1.text;
      rel.var2 = v2.text;
      for (auto& t : lhs_terms) rel.lhs.push_back(RelationTerm{t.scalar, t.gens});
      for (auto& t : rhs_terms) rel.rhs.push_back(RelationTerm{t.scalar, t.gens});
      relation_ids.insert(rel.id);
      def.relations.push_back(std::move(rel));
    } else {
      throw ParseError(lineno, head.col, "unknown declaration " + head.text);
    }
  }

  if (!mode_seen) throw ParseError(lineno + 1, 1, "missing mode declaration");
  for (const auto& rel : def.relations) {
    for (const auto* side : {&rel.lhs, &rel.rhs}) {
      for (const auto& t : *side) {
        for (const auto& g : t.gens) {
          if (!realized.count(g.family))
            throw ParseError(lineno + 1, 1,
                             std::string("relation ") + rel.id + " uses unrealized generator " +
                                 g.family);
        }
      }
    }
  }
  return def;
}

AlgebraContext AlgebraDef::context() const {
  AlgebraContext ctx;
  ctx.mode = mode;
  for (const auto& [x, y, rhs] : rules) ctx.rules.add_rule(x, y, rhs);
  for (const auto& [fam, r] : realizations) ctx.realizations[fam] = r;
  ctx.relations = relations;
  return ctx;
}

std::string render_algebra_def(const AlgebraDef& def) {
  std::string out;
  out += std::string("mode ") + name(def.mode) + "\n\n";
  for (const auto& [g, d] : def.generators)
    out += std::string("generator ") + name(g) + " degree " + std::to_string(d) + "\n";
  out += "\n";
  for (const auto& [x, y, rhs] : def.rules)
    out += std::string("rule: ") + name(x) + " " + name(y) + " -> " + element_str_alg(rhs) + "\n";
  out += "\n";
  for (const auto& [fam, r] : def.realizations) {
    out += std::string("realize ") + fam + "[" + r.index_var + "]:";
    std::string coeff = scalar_template_str(r.coeff);
    if (!coeff.empty()) out += " " + coeff;
    for (const auto& [g, e] : r.factors) {
      out += std::string(" ") + name(g);
      if (!(e == LinExpr::lit(1))) out += "^(" + e.str() + ")";
    }
    out += "\n";
  }
  out += "\n";
  auto side_str = [](const std::vector<RelationTerm>& side) {
    if (side.empty()) return std::string("0");
    std::string s;
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (i) s += " + ";
      std::string term = scalar_template_str(side[i].scalar);
      for (const auto& g : side[i].gens)
        term +=
            (term.empty() ? "" : " ") + std::string(1, g.family) + "[" + g.index.str() + "]";
      s += term;
    }
    return s;
  };
  for (const auto& rel : def.relations) {
    out += "relation " + rel.id + "(" + rel.var1 + "," + rel.var2 + "): " + side_str(rel.lhs) +
           " = " + side_str(rel.rhs) + "\n";
  }
  return out;
}

}  // namespace qsvir
