#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratrec/oracle.hpp"
#include "ratrec/ratfun.hpp"

namespace ratrec {

// Guarded expression tree for total oracle functions over the rationals.
// Guards compare polynomial expressions with zero; the optional default value
// makes division total.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Variable, Add, Sub, Mul, Div, Pow, Branch };
  Kind kind;
  Rat value;          // Literal
  int var = -1;       // Variable
  ExprPtr lhs, rhs;   // binary nodes; Pow uses lhs and exponent
  unsigned exponent = 0;
  std::vector<ExprPtr> guards;  // Branch: all guards == 0 selects then_branch
  ExprPtr then_branch, else_branch;
};

struct OracleSpec {
  std::vector<std::string> variables;
  ExprPtr root;
  std::optional<Rat> default_value;
};

// Grammar:
//   spec   := "vars" ident+ ";" expr ["default" rational]
//   expr   := cond | sum
//   cond   := "if" guard ("&&" guard)* "then" expr "else" expr
//   guard  := sum "==" "0"
//   sum    := ["-"] prod (("+"|"-") prod)*
//   prod   := pow (("*"|"/") pow)*
//   pow    := atom ["^" nat]
//   atom   := rational | ident | "(" expr ")"
// Whitespace is insignificant; rationals are "p/q" or integers. The leading
// minus in sum is an accepted extension; the canonical printer never emits it
// except around negative literals.
OracleSpec parse_oracle_spec(std::string_view text);

// Canonical printer; parse(print(parse(t))) == parse(t).
std::string print_oracle_spec(const OracleSpec& spec);

// Exact evaluation. Division by zero in the taken branch yields the declared
// default, otherwise DivisionByZeroWithoutDefault.
Rat eval_oracle(const OracleSpec& spec, std::span<const Rat> point);

// Expression without guards, expanded to a canonical fraction.
RatFun spec_to_ratfun(const OracleSpec& spec);

// Parses an expression against a fixed variable list (no "vars" header) and
// expands it; the fraction form for general expressions, the polynomial form
// additionally requires a constant denominator.
RatFun parse_fraction(std::string_view text, const std::vector<std::string>& variables);
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

// Exact sample table: rows of (point, value).
struct SampleTable {
  int nvars = 0;
  std::vector<std::pair<std::vector<Rat>, Rat>> rows;
};

// CSV with header "x1,...,xn,f" and rational-string cells. Duplicate points
// with conflicting values are rejected.
SampleTable parse_sample_table_csv(std::istream& in);

Oracle oracle_from_spec(OracleSpec spec);

// Exact lookup for listed points; falls back to the spec when given,
// otherwise throws PointNotCovered.
Oracle oracle_from_table(SampleTable table, std::optional<OracleSpec> fallback);

}  // namespace ratrec
