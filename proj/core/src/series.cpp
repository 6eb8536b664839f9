#include "lco/series.hpp"

namespace lco {

std::vector<Scalar> partial_sums(const Sequence& seq) {
  std::vector<Scalar> sums;
  sums.reserve(static_cast<std::size_t>(seq.size()));
  Scalar acc = seq.term_at(0);
  sums.push_back(acc);
  for (std::int64_t k = 1; k < seq.size(); ++k) {
    acc = acc + seq.term_at(k);
    sums.push_back(acc);
  }
  return sums;
}

SeriesReport l_series_report(const Sequence& seq, int max_depth,
                             const std::optional<DecayEstimate>& decay,
                             std::size_t digit_budget) {
  if (max_depth < 1) throw RangeError("series depth must be >= 1");
  if (!seq.is_finite() && seq.size() <= max_depth) {
    throw HorizonExceededError(
        "window length " + std::to_string(seq.size()) +
        " does not cover series analysis to depth " +
        std::to_string(max_depth));
  }

  SeriesReport report;
  report.horizon = seq.size();
  report.partial_sums = partial_sums(seq);
  report.total = report.partial_sums.back();

  report.l_series_per_depth.push_back(report.partial_sums);
  Sequence current = iterate_l(seq, 1, digit_budget);
  Sequence depth1 = current;
  report.l_series_per_depth.push_back(partial_sums(current));
  for (int i = 2; i <= max_depth; ++i) {
    current = iterate_l(current, 1, digit_budget);
    report.l_series_per_depth.push_back(partial_sums(current));
  }

  // Split sums over the b-window, term-matched so the identity is exact
  // regardless of convergence: k-1 < 0 is supplied by zero padding.
  const std::int64_t lo = 0;
  const std::int64_t hi = depth1.size() - 1;
  report.split_window_lo = lo;
  report.split_window_hi = hi;
  Scalar sum_b = depth1.term_at(0);
  for (std::int64_t k = 1; k <= hi; ++k) sum_b = sum_b + depth1.term_at(k);
  Scalar sum_sq = seq.term_at(0) * seq.term_at(0);
  Scalar sum_cross = seq.term_at(1) * seq.term_at(-1);
  for (std::int64_t k = 1; k <= hi; ++k) {
    sum_sq = sum_sq + seq.term_at(k) * seq.term_at(k);
    sum_cross = sum_cross + seq.term_at(k + 1) * seq.term_at(k - 1);
  }
  report.sum_b = sum_b;
  report.sum_squares = sum_sq;
  report.sum_cross = sum_cross;
  report.split_identity_holds = (sum_b == sum_sq - sum_cross);

  if (decay.has_value()) {
    if (!decay->valid) throw InvalidEstimateError();
    const Scalar one = decay->r.is_exact() ? Scalar::exact(1L)
                                           : Scalar::floating(1.0);
    report.comparison_bound =
        decay->c * decay->c / (one - decay->r * decay->r);
    report.bound_holds = sum_b <= *report.comparison_bound;
  }
  return report;
}

}  // namespace lco
