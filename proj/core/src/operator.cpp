#include "lco/operator.hpp"

namespace lco {

Sequence apply_l(const Sequence& seq) {
  const std::int64_t n = seq.size();
  std::vector<Scalar> out;
  if (seq.is_finite()) {
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
      out.push_back(seq.term_at(k) * seq.term_at(k) -
                    seq.term_at(k + 1) * seq.term_at(k - 1));
    }
    return Sequence::finite(std::move(out), seq.provenance());
  }
  if (n < 2) {
    throw HorizonExceededError(
        "truncated window of length " + std::to_string(n) +
        " is too small to apply the operator");
  }
  out.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t k = 0; k + 1 < n; ++k) {
    out.push_back(seq.term_at(k) * seq.term_at(k) -
                  seq.term_at(k + 1) * seq.term_at(k - 1));
  }
  return Sequence::truncated(std::move(out), seq.provenance());
}

namespace {

void enforce_digit_budget(const Sequence& seq, std::size_t budget,
                          int depth) {
  for (const Scalar& t : seq.terms()) {
    const std::size_t digits = t.numerator_digits();
    if (digits > budget) {
      throw DepthTooDeepError(
          "numerator reached " + std::to_string(digits) +
          " decimal digits at depth " + std::to_string(depth) +
          ", over the budget of " + std::to_string(budget));
    }
  }
}

}  // namespace

Sequence iterate_l(const Sequence& seq, int i, std::size_t digit_budget) {
  if (i < 0) throw RangeError("iteration count must be >= 0");
  Sequence current = seq;
  for (int d = 1; d <= i; ++d) {
    current = apply_l(current);
    enforce_digit_budget(current, digit_budget, d);
  }
  return current;
}

std::vector<std::int64_t> boundary_indices_of(const Sequence& seq) {
  std::vector<std::int64_t> boundary{0};
  if (seq.is_finite() && seq.size() > 1) {
    boundary.push_back(seq.size() - 1);
  }
  return boundary;
}

LcCheck scan_nonnegativity(const Sequence& image, int depth,
                           const std::vector<std::int64_t>& boundary,
                           const NumericMode& mode) {
  LcCheck check;
  check.boundary_indices = boundary;
  for (std::int64_t k = 0; k < image.size(); ++k) {
    switch (mode.sign(image.term_at(k))) {
      case Sign::Negative:
        check.status = LcStatus::Fails;
        check.witness = LcWitness{depth, k, image.term_at(k)};
        return check;
      case Sign::Indeterminate:
        // Float mode: anything within epsilon of zero gets no sign verdict.
        check.status = LcStatus::Indeterminate;
        check.indeterminate_at = k;
        return check;
      default:
        break;
    }
  }
  return check;
}

LcCheck check_log_concave(const Sequence& seq, const NumericMode& mode) {
  return scan_nonnegativity(apply_l(seq), 1, boundary_indices_of(seq), mode);
}

DepthReport probe_depth(const Sequence& seq, int max_depth,
                        const NumericMode& mode, std::size_t digit_budget) {
  if (max_depth < 1) throw RangeError("max depth must be >= 1");
  if (!seq.is_finite() && seq.size() <= max_depth) {
    throw HorizonExceededError(
        "window length " + std::to_string(seq.size()) +
        " does not cover probing to depth " + std::to_string(max_depth));
  }
  DepthReport report;
  Sequence current = seq;
  for (int depth = 1; depth <= max_depth; ++depth) {
    const auto boundary = boundary_indices_of(current);
    current = apply_l(current);
    enforce_digit_budget(current, digit_budget, depth);
    LcCheck check = scan_nonnegativity(current, depth, boundary, mode);
    report.statuses.push_back({depth, check.status});
    report.probed_depth = depth;
    report.boundary_indices = check.boundary_indices;
    if (check.status != LcStatus::NonNegative) {
      report.witness = check.witness;
      report.indeterminate_at = check.indeterminate_at;
      break;
    }
  }
  return report;
}

}  // namespace lco
