#include "lco/analysis.hpp"

#include <algorithm>

namespace lco {

namespace {

Scalar zero_like(const Scalar& v) {
  return v.is_exact() ? Scalar::exact(0L) : Scalar::floating(0.0);
}

Scalar match_mode(const Scalar& v, const Scalar& like) {
  if (v.is_exact() == like.is_exact()) return v;
  if (like.is_exact()) {
    throw MixedModeError();
  }
  return v.as_float();
}

Scalar abs_of(const Scalar& v) {
  return v < zero_like(v) ? -v : v;
}

Scalar half_of(const Scalar& v) {
  return v.is_exact() ? v / Scalar::exact(2L) : v / Scalar::floating(2.0);
}

}  // namespace

MonotoneResult detect_monotone(const Sequence& seq, std::int64_t from) {
  const std::int64_t n = seq.size();
  if (n < 2 || from < 0 || from >= n) {
    throw RangeError("monotonicity scan needs a window of length >= 2");
  }
  // Longest weakly monotone suffixes of each direction.
  std::int64_t inc_start = n - 1;
  std::int64_t dec_start = n - 1;
  for (std::int64_t j = n - 2; j >= from; --j) {
    if (inc_start == j + 1 && seq.term_at(j) <= seq.term_at(j + 1)) {
      inc_start = j;
    }
    if (dec_start == j + 1 && seq.term_at(j) >= seq.term_at(j + 1)) {
      dec_start = j;
    }
  }
  const bool inc_ok = inc_start >= from && n - inc_start >= 3;
  const bool dec_ok = dec_start >= from && n - dec_start >= 3;
  if (!inc_ok && !dec_ok) return {MonotoneKind::None, 0};
  if (inc_ok && (!dec_ok || inc_start <= dec_start)) {
    return {MonotoneKind::Increasing, inc_start};
  }
  return {MonotoneKind::Decreasing, dec_start};
}

BoundCertificate bound_certificate(const Sequence& seq) {
  Scalar m = abs_of(seq.term_at(0));
  for (std::int64_t k = 1; k < seq.size(); ++k) {
    Scalar a = abs_of(seq.term_at(k));
    if (a > m) m = a;
  }
  Scalar two = m.is_exact() ? Scalar::exact(2L) : Scalar::floating(2.0);
  return {m, two * m * m};
}

ConvergenceDiagnosis diagnose_convergence(const Sequence& seq,
                                          std::int64_t window,
                                          const Scalar& eps,
                                          const Scalar& magnitude_bound) {
  const std::int64_t n = seq.size();
  if (window < 2 || n < window) {
    throw RangeError("convergence window must satisfy 2 <= W <= length");
  }
  const Scalar eps_m = match_mode(eps, seq.term_at(0));
  const Scalar bound_m = match_mode(magnitude_bound, seq.term_at(0));

  ConvergenceDiagnosis diag;
  diag.window = window;
  diag.eps = eps_m;

  // Suffix min/max in one backward pass.
  std::vector<Scalar> suf_min(static_cast<std::size_t>(n));
  std::vector<Scalar> suf_max(static_cast<std::size_t>(n));
  suf_min[n - 1] = suf_max[n - 1] = seq.term_at(n - 1);
  for (std::int64_t k = n - 2; k >= 0; --k) {
    suf_min[k] = std::min(suf_min[k + 1], seq.term_at(k));
    suf_max[k] = std::max(suf_max[k + 1], seq.term_at(k));
  }

  const std::int64_t tail_start = n - window;
  if (suf_max[tail_start] - suf_min[tail_start] <= eps_m) {
    diag.verdict = ConvergenceDiagnosis::Verdict::Converges;
    diag.limit_estimate = half_of(suf_max[tail_start] + suf_min[tail_start]);
    std::int64_t nh = tail_start;
    while (nh > 0 && suf_max[nh - 1] - suf_min[nh - 1] <= eps_m) --nh;
    diag.threshold_index = nh;
    return diag;
  }

  // Unbounded divergence: |a_k| eventually non-decreasing and the tail
  // beyond the configured magnitude bound.
  std::int64_t abs_mono_start = n - 1;
  for (std::int64_t j = n - 2; j >= 0; --j) {
    if (abs_of(seq.term_at(j)) <= abs_of(seq.term_at(j + 1))) {
      abs_mono_start = j;
    } else {
      break;
    }
  }
  if (n - abs_mono_start >= window && abs_of(seq.term_at(n - 1)) > bound_m) {
    diag.verdict = ConvergenceDiagnosis::Verdict::DivergesUnbounded;
    diag.threshold_index = abs_mono_start;
    return diag;
  }

  // Oscillation: repeated direction changes across the tail window.
  int direction_changes = 0;
  int last_dir = 0;
  for (std::int64_t k = tail_start + 1; k < n; ++k) {
    const auto c = seq.term_at(k) <=> seq.term_at(k - 1);
    const int dir = c < 0 ? -1 : c > 0 ? 1 : 0;
    if (dir != 0) {
      if (last_dir != 0 && dir != last_dir) ++direction_changes;
      last_dir = dir;
    }
  }
  if (direction_changes >= 2) {
    diag.verdict = ConvergenceDiagnosis::Verdict::Oscillates;
    return diag;
  }
  diag.verdict = ConvergenceDiagnosis::Verdict::Indeterminate;
  return diag;
}

DecayEstimate estimate_decay(const Sequence& seq) {
  const std::int64_t n = seq.size();
  if (n < 2) throw RangeError("decay estimation needs at least 2 terms");
  const Scalar zero = zero_like(seq.term_at(0));
  for (std::int64_t k = 0; k < n; ++k) {
    if (!(seq.term_at(k) > zero)) throw NonPositiveTermError(k);
  }

  std::vector<Scalar> ratio(static_cast<std::size_t>(n - 1));
  for (std::int64_t j = 0; j + 1 < n; ++j) {
    ratio[j] = seq.term_at(j + 1) / seq.term_at(j);
  }

  // Smallest N from which the ratios are non-increasing to the end. A
  // lone final ratio is trivially "non-increasing" but carries no decay
  // evidence, so the run must contain at least two ratios; sequences
  // with ratios rising toward 1 (limit above zero) land in NoDecay here.
  std::int64_t nh = n - 2;
  for (std::int64_t j = n - 3; j >= 0; --j) {
    if (ratio[j] >= ratio[j + 1]) {
      nh = j;
    } else {
      break;
    }
  }
  const bool run_nontrivial = nh <= n - 3;

  DecayEstimate est;
  est.n = nh;
  est.r = ratio[nh];
  const Scalar one = seq.term_at(0).is_exact() ? Scalar::exact(1L)
                                               : Scalar::floating(1.0);
  est.valid = run_nontrivial && est.r < one;

  Scalar peak = seq.term_at(0);
  for (std::int64_t k = 1; k <= nh; ++k) {
    if (seq.term_at(k) > peak) peak = seq.term_at(k);
  }
  est.c = peak / est.r.pow_int(nh);

  // Certificate check a_k <= C r^k over the whole window.
  Scalar envelope = est.c;
  est.residual = seq.term_at(0) - envelope;
  for (std::int64_t k = 1; k < n; ++k) {
    envelope = envelope * est.r;
    Scalar d = seq.term_at(k) - envelope;
    if (d > est.residual) est.residual = d;
  }
  if (est.valid && est.residual > zero) {
    // Cannot happen by construction; keep the certificate honest anyway.
    est.valid = false;
  }
  return est;
}

DecayEstimate predict_iterated_decay(const DecayEstimate& est, int i) {
  if (!est.valid) throw InvalidEstimateError();
  if (i < 0) throw RangeError("iteration count must be >= 0");
  DecayEstimate out = est;
  out.residual = zero_like(est.c);
  for (int d = 0; d < i; ++d) {
    out.c = out.c * out.c;
    out.r = out.r * out.r;
  }
  return out;
}

MonotoneCriterion monotone_convergence_criterion(const Sequence& seq,
                                              std::int64_t window,
                                              const Scalar& eps) {
  MonotoneCriterion result;
  result.monotone = detect_monotone(seq);
  Sequence image = apply_l(seq);
  result.image_diagnosis = diagnose_convergence(image, window, eps);
  if (result.monotone.kind == MonotoneKind::None) return result;
  if (result.image_diagnosis.verdict !=
      ConvergenceDiagnosis::Verdict::Converges) {
    return result;
  }
  // A monotone window with convergent L-image: the limit must be zero.
  const Scalar limit = *result.image_diagnosis.limit_estimate;
  result.satisfied = abs_of(limit) <= match_mode(eps, limit);
  return result;
}

}  // namespace lco
