#include "ratrec/expr.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <sstream>

#include "ratrec/errors.hpp"

namespace ratrec {

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  int line, col;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ExprParseError(message, current_.line, current_.col);
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      bump();
    }
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word.push_back(text_[pos_]);
        bump();
      }
      current_ = {Token::Kind::Ident, std::move(word), current_.line, current_.col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        bump();
      }
      current_ = {Token::Kind::Number, std::move(digits), current_.line, current_.col};
      return;
    }
    if (c == '=' || c == '&') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == c) {
        bump();
        bump();
        current_ = {Token::Kind::Punct, std::string(2, c), current_.line, current_.col};
        return;
      }
      throw ExprParseError(std::string("stray '") + c + "'", line_, col_);
    }
    if (std::string("+-*/^();").find(c) != std::string::npos) {
      bump();
      current_ = {Token::Kind::Punct, std::string(1, c), current_.line, current_.col};
      return;
    }
    throw ExprParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_{Token::Kind::End, "", 1, 1};
};

ExprPtr make_literal(Rat value) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Literal;
  e->value = std::move(value);
  return e;
}

ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
public:
  Parser(std::string_view text, std::vector<std::string> variables)
      : lex_(text), variables_(std::move(variables)) {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      index_[variables_[i]] = static_cast<int>(i);
    }
  }

  static OracleSpec parse_spec(std::string_view text) {
    Parser p(text, {});
    if (!(p.lex_.peek().kind == Token::Kind::Ident && p.lex_.peek().text == "vars")) {
      p.lex_.fail("expected 'vars'");
    }
    p.lex_.take();
    while (p.lex_.peek().kind == Token::Kind::Ident && !is_keyword(p.lex_.peek().text)) {
      Token t = p.lex_.take();
      if (!p.index_.emplace(t.text, static_cast<int>(p.variables_.size())).second) {
        throw ExprParseError("duplicate variable name '" + t.text + "'", t.line, t.col);
      }
      p.variables_.push_back(t.text);
    }
    if (p.variables_.empty()) p.lex_.fail("expected at least one variable name");
    if (!(p.lex_.peek().kind == Token::Kind::Punct && p.lex_.peek().text == ";")) {
      p.lex_.fail("expected ';' after the variable list");
    }
    p.lex_.take();

    OracleSpec spec;
    spec.variables = p.variables_;
    spec.root = p.parse_expr();
    if (p.lex_.peek().kind == Token::Kind::Ident && p.lex_.peek().text == "default") {
      p.lex_.take();
      spec.default_value = p.parse_rational_literal();
    }
    if (p.lex_.peek().kind != Token::Kind::End) p.lex_.fail("trailing input");
    validate_guards(spec);
    return spec;
  }

  static ExprPtr parse_expression(std::string_view text,
                                  const std::vector<std::string>& variables) {
    Parser p(text, variables);
    ExprPtr e = p.parse_expr();
    if (p.lex_.peek().kind != Token::Kind::End) p.lex_.fail("trailing input");
    return e;
  }

private:
  static bool is_keyword(const std::string& w) {
    return w == "if" || w == "then" || w == "else" || w == "default" || w == "vars";
  }

  static void validate_guards(const OracleSpec& spec);

  ExprPtr parse_expr() {
    if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "if") {
      return parse_cond();
    }
    return parse_sum();
  }

  ExprPtr parse_cond() {
    lex_.take();  // if
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Branch;
    e->guards.push_back(parse_guard());
    while (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "&&") {
      lex_.take();
      e->guards.push_back(parse_guard());
    }
    expect_ident("then");
    e->then_branch = parse_expr();
    expect_ident("else");
    e->else_branch = parse_expr();
    return e;
  }

  ExprPtr parse_guard() {
    ExprPtr lhs = parse_sum();
    if (!(lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "==")) {
      lex_.fail("expected '==' in guard");
    }
    lex_.take();
    Token zero = lex_.take();
    if (zero.kind != Token::Kind::Number || zero.text != "0") {
      throw ExprParseError("guards must compare with 0", zero.line, zero.col);
    }
    return lhs;
  }

  ExprPtr parse_sum() {
    ExprPtr acc;
    if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "-") {
      lex_.take();
      acc = make_binary(Expr::Kind::Sub, make_literal(Rat(0)), parse_prod());
    } else {
      acc = parse_prod();
    }
    while (lex_.peek().kind == Token::Kind::Punct &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      bool add = lex_.take().text == "+";
      acc = make_binary(add ? Expr::Kind::Add : Expr::Kind::Sub, acc, parse_prod());
    }
    return acc;
  }

  ExprPtr parse_prod() {
    ExprPtr acc = parse_pow();
    while (lex_.peek().kind == Token::Kind::Punct &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      bool mul = lex_.take().text == "*";
      acc = make_binary(mul ? Expr::Kind::Mul : Expr::Kind::Div, acc, parse_pow());
    }
    return acc;
  }

  ExprPtr parse_pow() {
    ExprPtr base = parse_atom();
    if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "^") {
      lex_.take();
      Token t = lex_.take();
      if (t.kind != Token::Kind::Number) {
        throw ExprParseError("exponent must be a non-negative integer", t.line, t.col);
      }
      if (t.text.size() > 5) {
        throw ExprParseError("exponent too large", t.line, t.col);
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Pow;
      e->lhs = std::move(base);
      e->exponent = static_cast<unsigned>(std::stoul(t.text));
      return e;
    }
    return base;
  }

  ExprPtr parse_atom() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::Number) {
      lex_.take();
      Rat value(t.text);
      // "p/q" with no spaces arrives as number, '/', number and is folded by
      // parse_prod; plain integers land here.
      return make_literal(value);
    }
    if (t.kind == Token::Kind::Ident) {
      if (is_keyword(t.text)) lex_.fail("unexpected keyword '" + t.text + "'");
      lex_.take();
      auto it = index_.find(t.text);
      if (it == index_.end()) {
        throw ExprParseError("undeclared identifier '" + t.text + "'", t.line, t.col);
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Variable;
      e->var = it->second;
      return e;
    }
    if (t.kind == Token::Kind::Punct && t.text == "(") {
      lex_.take();
      ExprPtr inner = parse_expr();
      if (!(lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == ")")) {
        lex_.fail("expected ')'");
      }
      lex_.take();
      return inner;
    }
    lex_.fail("expected a value");
  }

  Rat parse_rational_literal() {
    bool negative = false;
    if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "-") {
      lex_.take();
      negative = true;
    }
    Token num = lex_.take();
    if (num.kind != Token::Kind::Number) {
      throw ExprParseError("expected a rational literal", num.line, num.col);
    }
    std::string text = num.text;
    if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "/") {
      lex_.take();
      Token den = lex_.take();
      if (den.kind != Token::Kind::Number) {
        throw ExprParseError("expected a denominator", den.line, den.col);
      }
      text += "/" + den.text;
    }
    Rat value = rat_from_string(text);
    return negative ? Rat(-value) : value;
  }

  void expect_ident(const std::string& word) {
    Token t = lex_.peek();
    if (!(t.kind == Token::Kind::Ident && t.text == word)) {
      lex_.fail("expected '" + word + "'");
    }
    lex_.take();
  }

  Lexer lex_;
  std::vector<std::string> variables_;
  std::map<std::string, int> index_;
};

RatFun expr_to_ratfun(const Expr& e, int nvars) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return RatFun::constant(nvars, e.value);
    case Expr::Kind::Variable:
      return RatFun::from_poly(MPoly::variable(nvars, e.var));
    case Expr::Kind::Add:
      return expr_to_ratfun(*e.lhs, nvars) + expr_to_ratfun(*e.rhs, nvars);
    case Expr::Kind::Sub:
      return expr_to_ratfun(*e.lhs, nvars) - expr_to_ratfun(*e.rhs, nvars);
    case Expr::Kind::Mul:
      return expr_to_ratfun(*e.lhs, nvars) * expr_to_ratfun(*e.rhs, nvars);
    case Expr::Kind::Div:
      return expr_to_ratfun(*e.lhs, nvars) / expr_to_ratfun(*e.rhs, nvars);
    case Expr::Kind::Pow: {
      RatFun base = expr_to_ratfun(*e.lhs, nvars);
      RatFun acc = RatFun::constant(nvars, Rat(1));
      unsigned exp = e.exponent;
      while (exp > 0) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1;
      }
      return acc;
    }
    case Expr::Kind::Branch:
      throw InputError("conditional expression where a rational expression is required");
  }
  throw std::logic_error("unhandled expression node");
}

struct DivideByZero {};

Rat eval_expr(const Expr& e, std::span<const Rat> point) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return e.value;
    case Expr::Kind::Variable:
      return point[e.var];
    case Expr::Kind::Add:
      return eval_expr(*e.lhs, point) + eval_expr(*e.rhs, point);
    case Expr::Kind::Sub:
      return eval_expr(*e.lhs, point) - eval_expr(*e.rhs, point);
    case Expr::Kind::Mul:
      return eval_expr(*e.lhs, point) * eval_expr(*e.rhs, point);
    case Expr::Kind::Div: {
      Rat den = eval_expr(*e.rhs, point);
      if (den == 0) throw DivideByZero{};
      return eval_expr(*e.lhs, point) / den;
    }
    case Expr::Kind::Pow:
      return rat_pow(eval_expr(*e.lhs, point), e.exponent);
    case Expr::Kind::Branch: {
      bool taken = true;
      for (const auto& guard : e.guards) {
        if (eval_expr(*guard, point) != 0) {
          taken = false;
          break;
        }
      }
      return eval_expr(taken ? *e.then_branch : *e.else_branch, point);
    }
  }
  throw std::logic_error("unhandled expression node");
}

void collect_guards(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == Expr::Kind::Branch) {
    for (const auto& g : e.guards) out.push_back(g.get());
    if (e.then_branch) collect_guards(*e.then_branch, out);
    if (e.else_branch) collect_guards(*e.else_branch, out);
    return;
  }
  if (e.lhs) collect_guards(*e.lhs, out);
  if (e.rhs) collect_guards(*e.rhs, out);
}

void Parser::validate_guards(const OracleSpec& spec) {
  std::vector<const Expr*> guards;
  collect_guards(*spec.root, guards);
  int n = static_cast<int>(spec.variables.size());
  for (const Expr* g : guards) {
    RatFun f = expr_to_ratfun(*g, n);  // throws on nested conditionals
    if (!f.den().is_constant()) {
      throw InputError("guard is not a polynomial expression");
    }
    if (f.num().is_constant() && !f.num().is_zero()) {
      throw InputError("guard compares a nonzero constant with zero");
    }
  }
}

int precedence(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

void print_expr(std::ostream& out, const Expr& e, const std::vector<std::string>& names,
                int parent_prec, bool right_side) {
  int prec = precedence(e.kind);
  bool parens = false;
  if (e.kind == Expr::Kind::Branch) {
    parens = parent_prec > 0;
  } else if (prec < parent_prec) {
    parens = true;
  } else if (prec == parent_prec && right_side && prec < 3) {
    // -, / are left-associative; parenthesize right nesting.
    parens = true;
  }
  if (parens) out << "(";
  switch (e.kind) {
    case Expr::Kind::Literal:
      if (e.value < 0) {
        out << "(-" << rat_to_string(Rat(-e.value)) << ")";
      } else {
        out << rat_to_string(e.value);
      }
      break;
    case Expr::Kind::Variable:
      out << names[e.var];
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      const char* op = e.kind == Expr::Kind::Add   ? " + "
                       : e.kind == Expr::Kind::Sub ? " - "
                       : e.kind == Expr::Kind::Mul ? "*"
                                                   : "/";
      print_expr(out, *e.lhs, names, prec, false);
      out << op;
      print_expr(out, *e.rhs, names, prec, true);
      break;
    }
    case Expr::Kind::Pow:
      print_expr(out, *e.lhs, names, prec + 1, false);
      out << "^" << e.exponent;
      break;
    case Expr::Kind::Branch: {
      out << "if ";
      for (std::size_t i = 0; i < e.guards.size(); ++i) {
        if (i > 0) out << " && ";
        print_expr(out, *e.guards[i], names, 0, false);
        out << " == 0";
      }
      out << " then ";
      print_expr(out, *e.then_branch, names, 4, false);
      out << " else ";
      print_expr(out, *e.else_branch, names, 4, false);
      break;
    }
  }
  if (parens) out << ")";
}

}  // namespace

OracleSpec parse_oracle_spec(std::string_view text) { return Parser::parse_spec(text); }

std::string print_oracle_spec(const OracleSpec& spec) {
  std::ostringstream out;
  out << "vars";
  for (const auto& v : spec.variables) out << " " << v;
  out << "; ";
  print_expr(out, *spec.root, spec.variables, 0, false);
  if (spec.default_value) {
    out << " default ";
    const Rat& d = *spec.default_value;
    out << (d < 0 ? "-" + rat_to_string(Rat(-d)) : rat_to_string(d));
  }
  return out.str();
}

Rat eval_oracle(const OracleSpec& spec, std::span<const Rat> point) {
  if (point.size() != spec.variables.size()) {
    throw InputError("evaluation point dimension mismatch");
  }
  try {
    return eval_expr(*spec.root, point);
  } catch (const DivideByZero&) {
    if (spec.default_value) return *spec.default_value;
    throw DivisionByZeroWithoutDefault("division by zero and no default value declared");
  }
}

RatFun spec_to_ratfun(const OracleSpec& spec) {
  return expr_to_ratfun(*spec.root, static_cast<int>(spec.variables.size()));
}

RatFun parse_fraction(std::string_view text, const std::vector<std::string>& variables) {
  ExprPtr e = Parser::parse_expression(text, variables);
  return expr_to_ratfun(*e, static_cast<int>(variables.size()));
}

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  RatFun f = parse_fraction(text, variables);
  if (!f.den().is_constant()) {
    throw InputError("expected a polynomial, found a genuine fraction: '" +
                     std::string(text) + "'");
  }
  return f.num() * (Rat(1) / f.den().constant_term());
}

SampleTable parse_sample_table_csv(std::istream& in) {
  auto trimmed = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    return s.substr(start);
  };
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty sample table");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(trimmed(cell));
  }
  if (header.size() < 2 || header.back() != "f") {
    throw InputError("sample table header must be 'x1,...,xn,f'");
  }
  SampleTable table;
  table.nvars = static_cast<int>(header.size()) - 1;

  std::map<std::vector<Rat>, Rat> seen;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trimmed(line).empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<Rat> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(rat_from_string(trimmed(cell)));
    if (static_cast<int>(cells.size()) != table.nvars + 1) {
      throw InputError("row " + std::to_string(lineno) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(table.nvars + 1));
    }
    Rat value = cells.back();
    cells.pop_back();
    auto [it, inserted] = seen.emplace(cells, value);
    if (!inserted && it->second != value) {
      throw InputError("conflicting values for a repeated point at row " +
                       std::to_string(lineno));
    }
    if (inserted) table.rows.emplace_back(std::move(cells), std::move(value));
  }
  if (table.rows.empty()) throw InputError("sample table has no rows");
  return table;
}

Oracle oracle_from_spec(OracleSpec spec) {
  auto shared = std::make_shared<OracleSpec>(std::move(spec));
  int n = static_cast<int>(shared->variables.size());
  return {n, [shared](std::span<const Rat> point) { return eval_oracle(*shared, point); }};
}

Oracle oracle_from_table(SampleTable table, std::optional<OracleSpec> fallback) {
  if (table.rows.empty()) throw InputError("sample table has no rows");
  if (fallback && static_cast<int>(fallback->variables.size()) != table.nvars) {
    throw InputError("fallback expression dimension does not match the table");
  }
  auto lookup = std::make_shared<std::map<std::vector<Rat>, Rat>>();
  for (auto& [point, value] : table.rows) lookup->emplace(point, value);
  auto shared_fallback =
      fallback ? std::make_shared<OracleSpec>(std::move(*fallback)) : nullptr;
  int n = table.nvars;
  return {n, [lookup, shared_fallback, n](std::span<const Rat> point) {
            if (static_cast<int>(point.size()) != n) {
              throw InputError("evaluation point dimension mismatch");
            }
            std::vector<Rat> key(point.begin(), point.end());
            if (auto it = lookup->find(key); it != lookup->end()) return it->second;
            if (shared_fallback) return eval_oracle(*shared_fallback, point);
            throw PointNotCovered("point not covered by the sample table");
          }};
}

}  // namespace ratrec
