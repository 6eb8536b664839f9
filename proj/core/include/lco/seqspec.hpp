#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lco/scalar.hpp"

namespace lco {

// Closed-form expression in the index variable k. Immutable once built.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Node {
    Const,
    VarK,
    Param,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Binomial,
    Factorial
  };

  Node node;
  Scalar value;       // Const
  std::string name;   // Param
  ExprPtr lhs, rhs;   // children; unary nodes use lhs only

  static ExprPtr constant(Scalar v);
  static ExprPtr var_k();
  static ExprPtr param(std::string name);
  static ExprPtr neg(ExprPtr child);
  static ExprPtr binary(Node op, ExprPtr l, ExprPtr r);
  static ExprPtr binomial(ExprPtr n, ExprPtr k);
  static ExprPtr factorial(ExprPtr child);

  bool equal_to(const Expr& other) const;
};

using ParamMap = std::map<std::string, Scalar>;

// Grammar (see parse_expr): +,- then *,/ then ^ (right-assoc, binding
// tighter than unary minus, so "-1^k" is -(1^k) and "(-1)^k" needs
// parentheses), atoms are integers, k, identifiers, calls, parens.
ExprPtr parse_expr(const std::string& text);

// Canonical text form; parse(pretty_print(e)) reproduces an equal AST.
std::string pretty_print(const Expr& e);

// Exact evaluation at index k. Throws EvalError subspecies: DivByZero,
// NonIntegerExponent, NegativeBinomialArg, UnboundParam.
Scalar eval_expr(const Expr& e, std::int64_t k, const ParamMap& params);

// Declarative sequence description: explicit terms, a builtin family, or
// a closed-form expression with bound parameters.
struct SeqSpec {
  enum class Kind { Explicit, Builtin, ClosedForm };

  Kind kind = Kind::Explicit;
  std::vector<Scalar> terms;  // Explicit
  std::string family;         // Builtin
  std::string expr_text;      // ClosedForm (original text, for reports)
  ExprPtr expr;               // ClosedForm
  ParamMap params;

  static SeqSpec explicit_terms(std::vector<Scalar> terms);
  static SeqSpec closed_form(const std::string& expr_text, ParamMap params);
};

// Registry lookup: constant(c), geometric(r), alternating, perturbed_const,
// harmonic_shift, binomial_row(n), linear. Throws UnknownFamily /
// MissingParam.
SeqSpec builtin_family(const std::string& name, const ParamMap& params);

std::vector<std::string> builtin_family_names();

// Closed form of a builtin, when it has one (binomial_row expands to an
// explicit Pascal row instead).
ExprPtr builtin_closed_form(const std::string& name);

// Evaluate a spec at one index (explicit specs follow the zero-padding
// convention only through Sequence; here k must be in range).
Scalar eval_spec(const SeqSpec& spec, std::int64_t k);

}  // namespace lco
