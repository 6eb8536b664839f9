#include "lco/scalar.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

namespace lco {

namespace mp = boost::multiprecision;

Scalar Scalar::rational(BigInt p, BigInt q) {
  if (q == 0) throw ZeroDenominatorError();
  if (q < 0) {
    p = -p;
    q = -q;
  }
  // cpp_rational canonicalizes (gcd reduction).
  return Scalar(BigRat(std::move(p), std::move(q)));
}

namespace {

// Decimal integer parse; tolerates leading zeros, which cpp_int's string
// constructor would read as an octal prefix.
BigInt parse_bigint(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size()) throw ParseError(pos, "empty integer literal");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw ParseError(pos, "invalid digit in integer literal");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

BigInt parse_decimal_int(const std::string& text) {
  return parse_bigint(text);
}

Scalar Scalar::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      return Scalar(BigRat(parse_bigint(text)));
    }
    return rational(parse_bigint(text.substr(0, slash)),
                    parse_bigint(text.substr(slash + 1)));
  } catch (const ZeroDenominatorError&) {
    throw;
  } catch (const Error&) {
    throw ParseError(0, "invalid rational literal '" + text + "'");
  }
}

double Scalar::to_double() const {
  if (is_exact()) return rat().convert_to<double>();
  return fp();
}

bool Scalar::is_zero() const {
  return is_exact() ? rat().is_zero() : fp() == 0.0;
}

std::size_t Scalar::numerator_digits() const {
  if (!is_exact()) return 0;
  BigInt n = mp::abs(numerator());
  if (n == 0) return 1;
  // str() on cpp_int is decimal.
  return n.str().size();
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_mode(o);
  if (is_exact()) return Scalar(BigRat(rat() + o.rat()));
  return Scalar(fp() + o.fp());
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_mode(o);
  if (is_exact()) return Scalar(BigRat(rat() - o.rat()));
  return Scalar(fp() - o.fp());
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_mode(o);
  if (is_exact()) return Scalar(BigRat(rat() * o.rat()));
  return Scalar(fp() * o.fp());
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_mode(o);
  if (o.is_zero()) throw DivByZeroError();
  if (is_exact()) return Scalar(BigRat(rat() / o.rat()));
  return Scalar(fp() / o.fp());
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(BigRat(-rat()));
  return Scalar(-fp());
}

Scalar Scalar::pow_int(std::int64_t e) const {
  if (e == 0) {
    return is_exact() ? Scalar(BigRat(1)) : Scalar(1.0);
  }
  if (is_zero() && e < 0) {
    throw DivByZeroError("zero raised to a negative exponent");
  }
  if (!is_exact()) return Scalar(std::pow(fp(), static_cast<double>(e)));
  const std::uint64_t mag = e > 0 ? static_cast<std::uint64_t>(e)
                                  : static_cast<std::uint64_t>(-e);
  BigInt pn = mp::pow(numerator(), static_cast<unsigned>(mag));
  BigInt pd = mp::pow(denominator(), static_cast<unsigned>(mag));
  if (e > 0) return Scalar(BigRat(std::move(pn), std::move(pd)));
  return Scalar(BigRat(std::move(pd), std::move(pn)));
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  require_same_mode(o);
  if (is_exact()) {
    const int c = rat().compare(o.rat());
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }
  return fp() < o.fp()   ? std::strong_ordering::less
         : fp() > o.fp() ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
}

std::string Scalar::str() const {
  if (is_exact()) {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, fp());
  (void)ec;
  return std::string(buf, p);
}

std::string Scalar::decimal(int significant_digits) const {
  std::ostringstream os;
  os.precision(significant_digits);
  if (is_exact()) {
    // cpp_rational -> cpp_bin_float for a controlled-precision decimal.
    using Float50 = mp::cpp_bin_float_50;
    os << Float50(rat());
  } else {
    os << fp();
  }
  return os.str();
}

NumericMode NumericMode::float_mode(double epsilon) {
  if (!(epsilon > 0)) {
    throw RangeError("float mode requires epsilon > 0");
  }
  return NumericMode(epsilon);
}

std::strong_ordering NumericMode::compare(const Scalar& a,
                                          const Scalar& b) const {
  if (is_exact()) return a <=> b;
  const double d = a.to_double() - b.to_double();
  if (std::abs(d) <= epsilon()) return std::strong_ordering::equal;
  return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Sign NumericMode::sign(const Scalar& v) const {
  if (is_exact()) {
    const auto c = v <=> Scalar::exact(0L);
    if (c < 0) return Sign::Negative;
    if (c > 0) return Sign::Positive;
    return Sign::Zero;
  }
  const double d = v.to_double();
  if (std::abs(d) <= epsilon()) return Sign::Indeterminate;
  return d < 0 ? Sign::Negative : Sign::Positive;
}

}  // namespace lco
