#pragma once

#include <cstdint>
#include <optional>

#include "lco/operator.hpp"
#include "lco/sequence.hpp"

namespace lco {

// sup |a_k| over the examined window, with the derived operator bound
// 2 M^2 valid at every output index.
struct BoundCertificate {
  Scalar m;
  Scalar derived_bound;  // 2 M^2 exactly
};

enum class MonotoneKind { Increasing, Decreasing, None };

struct MonotoneResult {
  MonotoneKind kind = MonotoneKind::None;
  std::int64_t from = 0;  // smallest N with weak monotonicity to the end
};

// Finite-horizon heuristic classification; never a proof.
struct ConvergenceDiagnosis {
  enum class Verdict { Converges, DivergesUnbounded, Oscillates, Indeterminate };

  Verdict verdict = Verdict::Indeterminate;
  std::optional<Scalar> limit_estimate;  // midpoint of tail min/max
  std::int64_t window = 0;
  Scalar eps;
  std::optional<std::int64_t> threshold_index;  // N-hat of the tail criterion
};

// Constructive exponential-decay certificate a_k <= C r^k over the window,
// with C = max{a_0..a_N} / r^N from the tail-ratio construction.
struct DecayEstimate {
  Scalar c;
  Scalar r;
  std::int64_t n = 0;
  bool valid = false;
  Scalar residual;  // max over window of a_k - C r^k; <= 0 when valid
};

// Smallest N >= from with weak monotonicity through the window end;
// requires at least 3 trailing terms.
MonotoneResult detect_monotone(const Sequence& seq, std::int64_t from = 0);

BoundCertificate bound_certificate(const Sequence& seq);

constexpr std::int64_t kDefaultConvergenceWindow = 16;
// Tail values above this magnitude, together with eventually monotone
// |a_k|, classify as unbounded divergence.
constexpr double kDefaultMagnitudeBound = 100.0;

ConvergenceDiagnosis diagnose_convergence(
    const Sequence& seq, std::int64_t window = kDefaultConvergenceWindow,
    const Scalar& eps = Scalar::rational(1, 1'000'000),
    const Scalar& magnitude_bound = Scalar::exact(100L));

// Requires strictly positive terms; throws NonPositiveTerm otherwise.
// valid = false (the NoDecay outcome) when the tail ratio is >= 1; C and
// r are still reported.
DecayEstimate estimate_decay(const Sequence& seq);

// Squaring recurrence C <- C^2, r <- r^2 applied i times; requires a
// valid input estimate.
DecayEstimate predict_iterated_decay(const DecayEstimate& est, int i);

// Combined criterion: input monotone and bounded over the window, and
// the L-image converges; then the L-limit estimate must sit within eps
// of zero.
struct MonotoneCriterion {
  bool satisfied = false;
  MonotoneResult monotone;
  ConvergenceDiagnosis image_diagnosis;
};

MonotoneCriterion monotone_convergence_criterion(
    const Sequence& seq, std::int64_t window = kDefaultConvergenceWindow,
    const Scalar& eps = Scalar::rational(1, 1'000'000));

}  // namespace lco
