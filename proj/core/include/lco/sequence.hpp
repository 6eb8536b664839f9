#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lco/scalar.hpp"
#include "lco/seqspec.hpp"

namespace lco {

// A finite sequence keeps its full support and pads with exact zeros on
// both sides. A truncated sequence is a finite window onto an infinite
// family: negative indices pad with zero, but reads at or beyond the
// horizon are a contract violation, not a silent zero.
class Sequence {
 public:
  enum class Kind { Finite, Truncated };

  static Sequence finite(std::vector<Scalar> terms,
                         std::optional<std::string> provenance = {});
  static Sequence truncated(std::vector<Scalar> terms,
                            std::optional<std::string> provenance = {});

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  // Number of stored terms: the support length for Finite, the valid
  // window (current horizon) for Truncated.
  std::int64_t size() const {
    return static_cast<std::int64_t>(terms_.size());
  }

  const std::vector<Scalar>& terms() const { return terms_; }

  // Padding conventions: zero for k < 0 always; zero for k >= size
  // when Finite; HorizonExceeded for k >= size when Truncated.
  const Scalar& term_at(std::int64_t k) const;

  // Finite slice [from, to], reindexed from 0.
  Sequence window(std::int64_t from, std::int64_t to) const;

  const std::optional<std::string>& provenance() const { return provenance_; }

 private:
  Sequence(Kind kind, std::vector<Scalar> terms,
           std::optional<std::string> provenance);

  Kind kind_;
  std::vector<Scalar> terms_;
  std::optional<std::string> provenance_;
};

// Evaluates a spec into a sequence: Finite for explicit term lists (and
// Pascal rows), Truncated at the given horizon otherwise. Evaluation
// errors surface as EvalError with the offending k.
Sequence materialize(const SeqSpec& spec, std::int64_t horizon);

// Same, then converts every term to float representation for float-mode
// runs.
Sequence materialize_float(const SeqSpec& spec, std::int64_t horizon);

}  // namespace lco
