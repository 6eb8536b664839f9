#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "lco/errors.hpp"

namespace lco {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Sign of a value under a numeric mode. Float mode never guesses the sign
// of anything within epsilon of zero.
enum class Sign { Negative, Zero, Positive, Indeterminate };

// The single number type of the library. In exact mode it is an
// arbitrary-precision rational kept in canonical form (positive
// denominator, gcd 1, zero as 0/1); in float mode it is a double.
// A whole analysis run uses one representation; mixing throws.
class Scalar {
 public:
  Scalar() : value_(BigRat(0)) {}

  static Scalar exact(BigRat v) { return Scalar(std::move(v)); }
  static Scalar exact(long n) { return Scalar(BigRat(n)); }
  static Scalar floating(double v) { return Scalar(v); }

  // p/q in canonical form; q must be nonzero.
  static Scalar rational(BigInt p, BigInt q);

  // Parses "p/q" or "p" (exact), used by all JSON/text inputs.
  static Scalar parse(const std::string& text);

  bool is_exact() const { return std::holds_alternative<BigRat>(value_); }

  const BigRat& rat() const { return std::get<BigRat>(value_); }
  double fp() const { return std::get<double>(value_); }

  // Exact value converted to double; identity for float values.
  double to_double() const;

  // Reinterpret this value in float representation.
  Scalar as_float() const { return Scalar(to_double()); }

  BigInt numerator() const { return boost::multiprecision::numerator(rat()); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(rat());
  }

  bool is_integer() const { return is_exact() && denominator() == 1; }
  bool is_zero() const;

  // Decimal digit count of the numerator, for the iterate digit guard.
  std::size_t numerator_digits() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;

  // Integer power; negative exponent on zero throws DivByZero.
  Scalar pow_int(std::int64_t e) const;

  // Exact total order (cross-multiplication). Float values compare as
  // doubles; epsilon-aware comparison lives in NumericMode.
  std::strong_ordering operator<=>(const Scalar& o) const;
  bool operator==(const Scalar& o) const { return (*this <=> o) == 0; }

  // "p/q" with q omitted when 1; shortest round-trip decimal for floats.
  std::string str() const;

  // Decimal approximation with the given number of significant digits.
  std::string decimal(int significant_digits = 12) const;

 private:
  explicit Scalar(BigRat v) : value_(std::move(v)) {}
  explicit Scalar(double v) : value_(v) {}

  void require_same_mode(const Scalar& o) const {
    if (is_exact() != o.is_exact()) throw MixedModeError();
  }

  std::variant<BigRat, double> value_;
};

// Decimal integer parse tolerating leading zeros.
BigInt parse_decimal_int(const std::string& text);

// Comparison policy for a whole run: exact, or float with a positive
// absolute tolerance for sign and equality tests.
class NumericMode {
 public:
  static NumericMode exact_mode() { return NumericMode(std::nullopt); }
  static NumericMode float_mode(double epsilon);

  bool is_exact() const { return !epsilon_.has_value(); }
  double epsilon() const { return *epsilon_; }

  // less / equal / greater; float mode reports equal within epsilon.
  std::strong_ordering compare(const Scalar& a, const Scalar& b) const;

  // Sign classification; Indeterminate only in float mode.
  Sign sign(const Scalar& v) const;

 private:
  explicit NumericMode(std::optional<double> eps) : epsilon_(eps) {}
  std::optional<double> epsilon_;
};

}  // namespace lco
