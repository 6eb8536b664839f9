#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lco {

// Base for every error the library raises on purpose. The CLI maps these
// to exit codes; anything else escaping is an internal error.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ZeroDenominatorError : public Error {
 public:
  explicit ZeroDenominatorError(const std::string& what = "zero denominator")
      : Error("ZeroDenominator", what) {}
};

class DivByZeroError : public Error {
 public:
  explicit DivByZeroError(const std::string& what = "division by zero")
      : Error("DivByZero", what) {}
};

class MixedModeError : public Error {
 public:
  explicit MixedModeError()
      : Error("MixedMode", "cannot mix exact and float values in one run") {}
};

class HorizonExceededError : public Error {
 public:
  explicit HorizonExceededError(const std::string& what)
      : Error("HorizonExceeded", what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error("RangeError", what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("ParseError", what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Expression evaluation failed at a specific index k.
class EvalError : public Error {
 public:
  EvalError(std::string code, std::int64_t k, const std::string& what)
      : Error(std::move(code), what + " (at k=" + std::to_string(k) + ")"),
        index_(k) {}

  std::int64_t index() const { return index_; }

 private:
  std::int64_t index_;
};

class UnknownFamilyError : public Error {
 public:
  explicit UnknownFamilyError(const std::string& name)
      : Error("UnknownFamily", "unknown builtin family '" + name + "'") {}
};

class MissingParamError : public Error {
 public:
  MissingParamError(const std::string& family, const std::string& param)
      : Error("MissingParam",
              "builtin '" + family + "' requires parameter '" + param + "'") {}
};

class NonPositiveTermError : public Error {
 public:
  explicit NonPositiveTermError(std::int64_t k)
      : Error("NonPositiveTerm",
              "term at k=" + std::to_string(k) + " is not strictly positive"),
        index_(k) {}

  std::int64_t index() const { return index_; }

 private:
  std::int64_t index_;
};

class InvalidEstimateError : public Error {
 public:
  explicit InvalidEstimateError()
      : Error("InvalidEstimate", "decay estimate is not valid") {}
};

class DepthTooDeepError : public Error {
 public:
  explicit DepthTooDeepError(const std::string& what)
      : Error("DepthTooDeep", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError", what) {}
};

}  // namespace lco
