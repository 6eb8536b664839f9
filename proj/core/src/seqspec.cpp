#include "lco/seqspec.hpp"

#include <cctype>
#include <sstream>

namespace lco {

ExprPtr Expr::constant(Scalar v) {
  auto e = std::make_shared<Expr>();
  e->node = Node::Const;
  e->value = std::move(v);
  return e;
}

ExprPtr Expr::var_k() {
  auto e = std::make_shared<Expr>();
  e->node = Node::VarK;
  return e;
}

ExprPtr Expr::param(std::string name) {
  auto e = std::make_shared<Expr>();
  e->node = Node::Param;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::neg(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->node = Node::Neg;
  e->lhs = std::move(child);
  return e;
}

ExprPtr Expr::binary(Node op, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->node = op;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::binomial(ExprPtr n, ExprPtr k) {
  return binary(Node::Binomial, std::move(n), std::move(k));
}

ExprPtr Expr::factorial(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->node = Node::Factorial;
  e->lhs = std::move(child);
  return e;
}

bool Expr::equal_to(const Expr& other) const {
  if (node != other.node) return false;
  switch (node) {
    case Node::Const:
      return value == other.value;
    case Node::VarK:
      return true;
    case Node::Param:
      return name == other.name;
    case Node::Neg:
    case Node::Factorial:
      return lhs->equal_to(*other.lhs);
    default:
      return lhs->equal_to(*other.lhs) && rhs->equal_to(*other.rhs);
  }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Kind { Int, Ident, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::End, "", pos_};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      tok_ = {Token::Kind::Int, src_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        ++pos_;
      }
      tok_ = {Token::Kind::Ident, src_.substr(start, pos_ - start), start};
      return;
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
      case '^':
      case '(':
      case ')':
      case ',':
        tok_ = {Token::Kind::Sym, std::string(1, c), pos_};
        ++pos_;
        return;
      default:
        throw ParseError(pos_, std::string("unexpected character '") + c +
                                   "'; expected operator, number, "
                                   "identifier, or parenthesis");
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (lex_.peek().kind != Token::Kind::End) {
      throw ParseError(lex_.peek().offset,
                       "trailing input '" + lex_.peek().text +
                           "'; expected operator or end of input");
    }
    return e;
  }

 private:
  bool at_sym(const char* s) const {
    return lex_.peek().kind == Token::Kind::Sym && lex_.peek().text == s;
  }

  void expect_sym(const char* s) {
    if (!at_sym(s)) {
      throw ParseError(lex_.peek().offset,
                       std::string("expected '") + s + "'");
    }
    lex_.take();
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (at_sym("+") || at_sym("-")) {
      const bool add = lex_.take().text == "+";
      e = Expr::binary(add ? Expr::Node::Add : Expr::Node::Sub, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (at_sym("*") || at_sym("/")) {
      const bool mul = lex_.take().text == "*";
      e = Expr::binary(mul ? Expr::Node::Mul : Expr::Node::Div, e, unary());
    }
    return e;
  }

  // '^' binds tighter than unary minus: "-1^k" is Neg(1^k) while
  // "(-1)^k" raises the constant -1. Unary minus on a bare literal
  // folds into the constant.
  ExprPtr unary() {
    if (at_sym("-")) {
      lex_.take();
      ExprPtr inner = unary();
      if (inner->node == Expr::Node::Const) {
        return Expr::constant(-inner->value);
      }
      return Expr::neg(inner);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (at_sym("^")) {
      lex_.take();
      return Expr::binary(Expr::Node::Pow, base, unary());
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::Int: {
        Token tok = lex_.take();
        return Expr::constant(
            Scalar::exact(BigRat(parse_decimal_int(tok.text))));
      }
      case Token::Kind::Ident: {
        Token tok = lex_.take();
        if (tok.text == "k") return Expr::var_k();
        if (at_sym("(")) return call(tok);
        return Expr::param(tok.text);
      }
      case Token::Kind::Sym:
        if (t.text == "(") {
          lex_.take();
          ExprPtr e = expr();
          expect_sym(")");
          return e;
        }
        break;
      case Token::Kind::End:
        throw ParseError(t.offset,
                         "unexpected end of input; expected number, "
                         "identifier, 'k', '-', or '('");
    }
    throw ParseError(t.offset, "unexpected '" + t.text +
                                   "'; expected number, identifier, 'k', "
                                   "'-', or '('");
  }

  ExprPtr call(const Token& name) {
    expect_sym("(");
    std::vector<ExprPtr> args;
    args.push_back(expr());
    while (at_sym(",")) {
      lex_.take();
      args.push_back(expr());
    }
    if (lex_.peek().kind == Token::Kind::End) {
      throw ParseError(lex_.peek().offset,
                       "unexpected end of input; expected ')' or ','");
    }
    expect_sym(")");
    if (name.text == "binomial") {
      if (args.size() != 2) {
        throw ParseError(name.offset, "binomial takes exactly 2 arguments");
      }
      return Expr::binomial(args[0], args[1]);
    }
    if (name.text == "factorial") {
      if (args.size() != 1) {
        throw ParseError(name.offset, "factorial takes exactly 1 argument");
      }
      return Expr::factorial(args[0]);
    }
    throw ParseError(name.offset, "unknown function '" + name.text + "'");
  }

  Lexer lex_;
};

int precedence(Expr::Node n) {
  switch (n) {
    case Expr::Node::Add:
    case Expr::Node::Sub:
      return 1;
    case Expr::Node::Mul:
    case Expr::Node::Div:
      return 2;
    case Expr::Node::Neg:
      return 3;
    case Expr::Node::Pow:
      return 4;
    default:
      return 5;  // atoms and calls
  }
}

void print(const Expr& e, std::ostream& os, int parent_prec) {
  const int prec = precedence(e.node);
  const bool parens = prec < parent_prec;
  if (parens) os << '(';
  switch (e.node) {
    case Expr::Node::Const:
      os << e.value.str();
      break;
    case Expr::Node::VarK:
      os << 'k';
      break;
    case Expr::Node::Param:
      os << e.name;
      break;
    case Expr::Node::Neg:
      os << '-';
      print(*e.lhs, os, prec);
      break;
    case Expr::Node::Add:
      print(*e.lhs, os, prec);
      os << " + ";
      print(*e.rhs, os, prec + 1);
      break;
    case Expr::Node::Sub:
      print(*e.lhs, os, prec);
      os << " - ";
      print(*e.rhs, os, prec + 1);
      break;
    case Expr::Node::Mul:
      print(*e.lhs, os, prec);
      os << "*";
      print(*e.rhs, os, prec + 1);
      break;
    case Expr::Node::Div:
      print(*e.lhs, os, prec);
      os << "/";
      print(*e.rhs, os, prec + 1);
      break;
    case Expr::Node::Pow: {
      // Base must be an atom; negative constants need parentheses to
      // survive the unary-minus precedence on reparse.
      const bool base_parens =
          precedence(e.lhs->node) < 5 ||
          (e.lhs->node == Expr::Node::Const &&
           e.lhs->value < Scalar::exact(0L));
      if (base_parens) os << '(';
      print(*e.lhs, os, 0);
      if (base_parens) os << ')';
      os << '^';
      print(*e.rhs, os, prec);
      break;
    }
    case Expr::Node::Binomial:
      os << "binomial(";
      print(*e.lhs, os, 0);
      os << ", ";
      print(*e.rhs, os, 0);
      os << ')';
      break;
    case Expr::Node::Factorial:
      os << "factorial(";
      print(*e.lhs, os, 0);
      os << ')';
      break;
  }
  if (parens) os << ')';
}

constexpr std::int64_t kMaxExponent = 1'000'000;
constexpr std::int64_t kMaxCombArg = 1'000'000;

std::int64_t require_integer(const Scalar& v, std::int64_t k,
                             const char* code, const char* what) {
  if (!v.is_integer()) throw EvalError(code, k, what);
  const BigInt n = v.numerator();
  if (n > kMaxCombArg || n < -kMaxExponent) {
    throw EvalError(code, k, std::string(what) + " (magnitude too large)");
  }
  return n.convert_to<std::int64_t>();
}

BigInt binomial_exact(std::int64_t n, std::int64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    c *= n - k + j;
    c /= j;
  }
  return c;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string pretty_print(const Expr& e) {
  std::ostringstream os;
  print(e, os, 0);
  return os.str();
}

Scalar eval_expr(const Expr& e, std::int64_t k, const ParamMap& params) {
  switch (e.node) {
    case Expr::Node::Const:
      return e.value;
    case Expr::Node::VarK:
      return Scalar::exact(static_cast<long>(k));
    case Expr::Node::Param: {
      auto it = params.find(e.name);
      if (it == params.end()) {
        throw EvalError("UnboundParam", k,
                        "unbound parameter '" + e.name + "'");
      }
      return it->second;
    }
    case Expr::Node::Neg:
      return -eval_expr(*e.lhs, k, params);
    case Expr::Node::Add:
      return eval_expr(*e.lhs, k, params) + eval_expr(*e.rhs, k, params);
    case Expr::Node::Sub:
      return eval_expr(*e.lhs, k, params) - eval_expr(*e.rhs, k, params);
    case Expr::Node::Mul:
      return eval_expr(*e.lhs, k, params) * eval_expr(*e.rhs, k, params);
    case Expr::Node::Div: {
      Scalar denom = eval_expr(*e.rhs, k, params);
      if (denom.is_zero()) {
        throw EvalError("DivByZero", k,
                        "division by zero in '" + pretty_print(*e.rhs) + "'");
      }
      return eval_expr(*e.lhs, k, params) / denom;
    }
    case Expr::Node::Pow: {
      Scalar exp = eval_expr(*e.rhs, k, params);
      const std::int64_t n = require_integer(
          exp, k, "NonIntegerExponent",
          ("exponent '" + pretty_print(*e.rhs) +
           "' must evaluate to an integer")
              .c_str());
      Scalar base = eval_expr(*e.lhs, k, params);
      if (base.is_zero() && n < 0) {
        throw EvalError("DivByZero", k, "zero raised to a negative exponent");
      }
      return base.pow_int(n);
    }
    case Expr::Node::Binomial: {
      const std::int64_t n = require_integer(
          eval_expr(*e.lhs, k, params), k, "NegativeBinomialArg",
          "binomial arguments must be nonnegative integers");
      const std::int64_t j = require_integer(
          eval_expr(*e.rhs, k, params), k, "NegativeBinomialArg",
          "binomial arguments must be nonnegative integers");
      if (n < 0 || j < 0) {
        throw EvalError("NegativeBinomialArg", k,
                        "binomial arguments must be nonnegative integers");
      }
      return Scalar::exact(BigRat(binomial_exact(n, j)));
    }
    case Expr::Node::Factorial: {
      const std::int64_t n = require_integer(
          eval_expr(*e.lhs, k, params), k, "NegativeBinomialArg",
          "factorial argument must be a nonnegative integer");
      if (n < 0) {
        throw EvalError("NegativeBinomialArg", k,
                        "factorial argument must be a nonnegative integer");
      }
      BigInt f = 1;
      for (std::int64_t j = 2; j <= n; ++j) f *= j;
      return Scalar::exact(BigRat(f));
    }
  }
  throw Error("Internal", "unhandled expression node");
}

// ---------------------------------------------------------------------------
// Builtin families
// ---------------------------------------------------------------------------

namespace {

struct Family {
  const char* closed_form;  // nullptr when the family expands explicitly
  std::vector<std::string> required_params;
};

const std::map<std::string, Family>& family_registry() {
  static const std::map<std::string, Family> reg = {
      {"constant", {"c", {"c"}}},
      {"geometric", {"r^k", {"r"}}},
      {"alternating", {"(-1)^k", {}}},
      {"perturbed_const", {"1 + 1/2^k", {}}},
      {"harmonic_shift", {"1 + 1/(k+1)", {}}},
      {"binomial_row", {nullptr, {"n"}}},
      {"linear", {"k", {}}},
  };
  return reg;
}

}  // namespace

SeqSpec SeqSpec::explicit_terms(std::vector<Scalar> terms) {
  SeqSpec s;
  s.kind = Kind::Explicit;
  s.terms = std::move(terms);
  return s;
}

SeqSpec SeqSpec::closed_form(const std::string& expr_text, ParamMap params) {
  SeqSpec s;
  s.kind = Kind::ClosedForm;
  s.expr_text = expr_text;
  s.expr = parse_expr(expr_text);
  s.params = std::move(params);
  return s;
}

SeqSpec builtin_family(const std::string& name, const ParamMap& params) {
  auto it = family_registry().find(name);
  if (it == family_registry().end()) throw UnknownFamilyError(name);
  for (const auto& p : it->second.required_params) {
    if (params.find(p) == params.end()) throw MissingParamError(name, p);
  }
  SeqSpec s;
  s.kind = SeqSpec::Kind::Builtin;
  s.family = name;
  s.params = params;
  if (it->second.closed_form != nullptr) {
    s.expr_text = it->second.closed_form;
    s.expr = parse_expr(s.expr_text);
  } else {
    // binomial_row(n): the Pascal row, an explicit finite sequence.
    const Scalar& n_param = params.at("n");
    if (!n_param.is_integer() || n_param < Scalar::exact(0L)) {
      throw RangeError("binomial_row requires a nonnegative integer n");
    }
    const std::int64_t n = n_param.numerator().convert_to<std::int64_t>();
    if (n > 10'000) throw RangeError("binomial_row n too large");
    for (std::int64_t j = 0; j <= n; ++j) {
      s.terms.push_back(Scalar::exact(BigRat(binomial_exact(n, j))));
    }
  }
  return s;
}

std::vector<std::string> builtin_family_names() {
  std::vector<std::string> names;
  for (const auto& [name, fam] : family_registry()) names.push_back(name);
  return names;
}

ExprPtr builtin_closed_form(const std::string& name) {
  auto it = family_registry().find(name);
  if (it == family_registry().end()) throw UnknownFamilyError(name);
  if (it->second.closed_form == nullptr) return nullptr;
  return parse_expr(it->second.closed_form);
}

Scalar eval_spec(const SeqSpec& spec, std::int64_t k) {
  if (!spec.terms.empty() || spec.kind == SeqSpec::Kind::Explicit) {
    if (k < 0 || k >= static_cast<std::int64_t>(spec.terms.size())) {
      throw RangeError("explicit spec index out of range");
    }
    return spec.terms[static_cast<std::size_t>(k)];
  }
  return eval_expr(*spec.expr, k, spec.params);
}

}  // namespace lco
