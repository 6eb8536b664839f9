#include <doctest.h>

#include <random>

#include "lco/seqspec.hpp"
#include "oracle.hpp"

using lco::Expr;
using lco::ExprPtr;
using lco::Scalar;

TEST_CASE("grammar-forced AST shapes") {
  ExprPtr alt = lco::parse_expr("(-1)^k");
  REQUIRE(alt->node == Expr::Node::Pow);
  CHECK(alt->lhs->node == Expr::Node::Const);
  CHECK(alt->lhs->value == Scalar::exact(-1L));
  CHECK(alt->rhs->node == Expr::Node::VarK);

  // Without parentheses the power binds tighter than the minus.
  ExprPtr neg = lco::parse_expr("-1^k");
  REQUIRE(neg->node == Expr::Node::Neg);
  CHECK(neg->lhs->node == Expr::Node::Pow);

  ExprPtr pert = lco::parse_expr("1 + 1/2^k");
  REQUIRE(pert->node == Expr::Node::Add);
  CHECK(pert->lhs->node == Expr::Node::Const);
  REQUIRE(pert->rhs->node == Expr::Node::Div);
  CHECK(pert->rhs->lhs->node == Expr::Node::Const);
  REQUIRE(pert->rhs->rhs->node == Expr::Node::Pow);
  CHECK(pert->rhs->rhs->lhs->value == Scalar::exact(2L));
}

TEST_CASE("power is right-associative") {
  ExprPtr e = lco::parse_expr("2^3^2");
  REQUIRE(e->node == Expr::Node::Pow);
  CHECK(e->lhs->value == Scalar::exact(2L));
  CHECK(e->rhs->node == Expr::Node::Pow);
  CHECK(lco::eval_expr(*e, 0, {}) == Scalar::exact(512L));
}

TEST_CASE("parse errors carry a byte offset") {
  try {
    lco::parse_expr("binomial(8, k");
    FAIL("expected ParseError");
  } catch (const lco::ParseError& e) {
    CHECK(e.offset() == 13);  // end of input
  }
  CHECK_THROWS_AS(lco::parse_expr(""), lco::ParseError);
  CHECK_THROWS_AS(lco::parse_expr("1 +"), lco::ParseError);
  CHECK_THROWS_AS(lco::parse_expr("2 ** 3"), lco::ParseError);
  CHECK_THROWS_AS(lco::parse_expr("foo(1)"), lco::ParseError);
}

TEST_CASE("evaluation examples") {
  CHECK(lco::eval_expr(*lco::parse_expr("(-1)^k"), 3, {}) ==
        Scalar::exact(-1L));
  CHECK(lco::eval_expr(*lco::parse_expr("1 + 1/2^k"), 2, {}) ==
        Scalar::rational(5, 4));
  // binomial(8,3) against the independent factorial formula
  CHECK(lco::eval_expr(*lco::parse_expr("binomial(8,k)"), 3, {}) ==
        Scalar::exact(lco::BigRat(oracle::binomial_by_factorials(8, 3))));
  CHECK(lco::eval_expr(*lco::parse_expr("binomial(8,k)"), 3, {}).str() == "56");
}

TEST_CASE("binomial with k above n is zero") {
  CHECK(lco::eval_expr(*lco::parse_expr("binomial(4,k)"), 9, {}) ==
        Scalar::exact(0L));
}

TEST_CASE("evaluation errors name the offense") {
  CHECK_THROWS_AS(lco::eval_expr(*lco::parse_expr("1/(k-2)"), 2, {}),
                  lco::EvalError);
  try {
    lco::eval_expr(*lco::parse_expr("2^(1/2)"), 0, {});
    FAIL("expected EvalError");
  } catch (const lco::EvalError& e) {
    CHECK(e.code() == "NonIntegerExponent");
  }
  try {
    lco::eval_expr(*lco::parse_expr("binomial(k-5, 1)"), 0, {});
    FAIL("expected EvalError");
  } catch (const lco::EvalError& e) {
    CHECK(e.code() == "NegativeBinomialArg");
  }
  try {
    lco::eval_expr(*lco::parse_expr("r^k"), 1, {});
    FAIL("expected EvalError");
  } catch (const lco::EvalError& e) {
    CHECK(e.code() == "UnboundParam");
  }
}

TEST_CASE("builtin registry") {
  CHECK(lco::eval_spec(lco::builtin_family("alternating", {}), 5) ==
        Scalar::exact(-1L));
  CHECK(lco::eval_spec(lco::builtin_family("perturbed_const", {}), 3) ==
        Scalar::rational(9, 8));
  lco::SeqSpec row =
      lco::builtin_family("binomial_row", {{"n", Scalar::exact(4L)}});
  REQUIRE(row.terms.size() == 5);
  CHECK(row.terms[0].str() == "1");
  CHECK(row.terms[1].str() == "4");
  CHECK(row.terms[2].str() == "6");
  CHECK(row.terms[3].str() == "4");
  CHECK(row.terms[4].str() == "1");

  CHECK_THROWS_AS(lco::builtin_family("nope", {}), lco::UnknownFamilyError);
  CHECK_THROWS_AS(lco::builtin_family("geometric", {}),
                  lco::MissingParamError);
}

TEST_CASE("builtins agree with their closed forms over k in [0,128]") {
  const lco::ParamMap params = {{"c", Scalar::rational(7, 2)},
                                {"r", Scalar::rational(2, 3)}};
  for (const std::string& name : lco::builtin_family_names()) {
    ExprPtr form = lco::builtin_closed_form(name);
    if (!form) continue;  // binomial_row expands explicitly
    lco::SeqSpec spec = lco::builtin_family(name, params);
    for (std::int64_t k = 0; k <= 128; ++k) {
      CHECK(lco::eval_spec(spec, k) == lco::eval_expr(*form, k, params));
    }
  }
}

TEST_CASE("pretty-print round trip reproduces the AST") {
  const char* corpus[] = {
      "(-1)^k",         "-1^k",
      "1 + 1/2^k",      "1 + 1/(k+1)",
      "r^k",            "3*(1/2)^k",
      "k",              "binomial(8, k)",
      "factorial(k)",   "k^2 - 2*k + 1",
      "(k+1)/(k+2)",    "2^3^2",
      "-(k+1)",         "c",
      "1 - 2 - 3",      "12/4/2",
      "(1+2)*(3+4)",    "k*(k-1)*(k-2)",
      "binomial(2*k, k)",
  };
  for (const char* text : corpus) {
    ExprPtr ast = lco::parse_expr(text);
    std::string printed = lco::pretty_print(*ast);
    ExprPtr again = lco::parse_expr(printed);
    CHECK_MESSAGE(ast->equal_to(*again), "round trip failed for: ", text,
                  " printed as: ", printed);
  }
}

TEST_CASE("parser survives random byte strings") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> len(0, 24);
  // bias toward grammar characters so parses get deep
  const std::string alphabet = "0123456789kr+-*/^(), binomialfactorial\t\x01\xff";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 100'000; ++i) {
    std::string s;
    const int n = len(rng);
    for (int j = 0; j < n; ++j) s += alphabet[pick(rng)];
    try {
      auto ast = lco::parse_expr(s);
      CHECK(ast != nullptr);
    } catch (const lco::ParseError&) {
      // fine: rejected with a diagnostic
    }
  }
}
