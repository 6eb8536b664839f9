#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lco/sequence.hpp"

namespace lco {

// Default digit budget for the iterate guard; numerator digit counts
// roughly double per depth.
constexpr std::size_t kDefaultDigitBudget = 1'000'000;

// Certificate that i-fold log-concavity fails: the first negative entry
// of the depth-i image.
struct LcWitness {
  int depth = 1;
  std::int64_t index = 0;
  Scalar value;
};

enum class LcStatus { NonNegative, Fails, Indeterminate };

// Outcome of one nonnegativity scan.
struct LcCheck {
  LcStatus status = LcStatus::NonNegative;
  std::optional<LcWitness> witness;              // Fails
  std::optional<std::int64_t> indeterminate_at;  // float mode only
  // Output indices whose value involves padded zeros (k=0, and the last
  // support index for Finite inputs).
  std::vector<std::int64_t> boundary_indices;
};

struct DepthStatus {
  int depth = 1;
  LcStatus status = LcStatus::NonNegative;
};

struct DepthReport {
  int probed_depth = 0;
  std::vector<DepthStatus> statuses;
  std::optional<LcWitness> witness;
  std::optional<std::int64_t> indeterminate_at;
  std::vector<std::int64_t> boundary_indices;  // at the deepest level probed
  // True when every probed depth came back NonNegative; this certifies
  // i-fold log-concavity up to probed_depth only, never infinity.
  bool i_fold_log_concave() const {
    return !witness.has_value() && !indeterminate_at.has_value();
  }
};

// b_k = a_k^2 - a_{k+1} a_{k-1} under the padding conventions: Finite
// support 0..n maps to Finite support 0..n; a Truncated window of H
// terms maps to a Truncated window of H-1 terms.
Sequence apply_l(const Sequence& seq);

// apply_l composed i times; i = 0 is the identity. Throws DepthTooDeep
// once any term's numerator exceeds digit_budget decimal digits.
Sequence iterate_l(const Sequence& seq, int i,
                   std::size_t digit_budget = kDefaultDigitBudget);

// Left-to-right nonnegativity scan of apply_l(seq).
LcCheck check_log_concave(const Sequence& seq,
                          const NumericMode& mode = NumericMode::exact_mode());

// Iterated probing: applies L depth by depth, stopping at the first
// failing (or indeterminate) depth.
DepthReport probe_depth(const Sequence& seq, int max_depth,
                        const NumericMode& mode = NumericMode::exact_mode(),
                        std::size_t digit_budget = kDefaultDigitBudget);

// Boundary output indices of apply_l for a given input.
std::vector<std::int64_t> boundary_indices_of(const Sequence& seq);

// Scans an already-computed L image for its first negative entry.
LcCheck scan_nonnegativity(const Sequence& image, int depth,
                           const std::vector<std::int64_t>& boundary,
                           const NumericMode& mode);

}  // namespace lco
