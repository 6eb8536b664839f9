#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lco/analysis.hpp"
#include "lco/sequence.hpp"

namespace lco {

// Finite-horizon series data: prefix sums of the input and of every
// L-iterate up to a depth, the split-sum decomposition of the depth-1
// image, and an optional geometric comparison bound.
struct SeriesReport {
  std::int64_t horizon = 0;
  std::vector<Scalar> partial_sums;  // of the input sequence
  Scalar total;                      // last partial sum

  // Index i holds the prefix sums of iterate_l(seq, i); depth 0 is the
  // input itself. Windows shrink by one per depth for truncated inputs.
  std::vector<std::vector<Scalar>> l_series_per_depth;

  // Split decomposition over the window where b_k is defined:
  // sum b_k = sum a_k^2 - sum a_{k+1} a_{k-1}, an exact finite identity.
  Scalar sum_b;
  Scalar sum_squares;
  Scalar sum_cross;
  bool split_identity_holds = false;
  std::int64_t split_window_lo = 0;
  std::int64_t split_window_hi = 0;

  // C^2 / (1 - r^2) from a valid decay estimate, checked against sum_b.
  std::optional<Scalar> comparison_bound;
  std::optional<bool> bound_holds;
};

std::vector<Scalar> partial_sums(const Sequence& seq);

SeriesReport l_series_report(const Sequence& seq, int max_depth,
                             const std::optional<DecayEstimate>& decay = {},
                             std::size_t digit_budget = kDefaultDigitBudget);

}  // namespace lco
