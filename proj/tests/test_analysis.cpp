#include <doctest.h>

#include <random>

#include "lco/analysis.hpp"
#include "lco/sequence.hpp"

using lco::ConvergenceDiagnosis;
using lco::MonotoneKind;
using lco::Scalar;
using lco::Sequence;

namespace {

Sequence builtin_seq(const std::string& name, std::int64_t horizon,
                     lco::ParamMap params = {}) {
  return lco::materialize(lco::builtin_family(name, params), horizon);
}

Sequence explicit_seq(std::initializer_list<const char*> values) {
  std::vector<Scalar> terms;
  for (const char* v : values) terms.push_back(Scalar::parse(v));
  return Sequence::finite(std::move(terms));
}

}  // namespace

TEST_CASE("monotonicity detection") {
  auto dec = lco::detect_monotone(builtin_seq("harmonic_shift", 64));
  CHECK(dec.kind == MonotoneKind::Decreasing);
  CHECK(dec.from == 0);

  CHECK(lco::detect_monotone(builtin_seq("alternating", 64)).kind ==
        MonotoneKind::None);

  auto inc = lco::detect_monotone(explicit_seq({"3", "1", "2", "4", "8"}));
  CHECK(inc.kind == MonotoneKind::Increasing);
  CHECK(inc.from == 1);
}

TEST_CASE("bound certificates carry 2M^2") {
  auto alt = lco::bound_certificate(builtin_seq("alternating", 16));
  CHECK(alt.m == Scalar::exact(1L));
  CHECK(alt.derived_bound == Scalar::exact(2L));

  auto row = lco::bound_certificate(
      builtin_seq("binomial_row", 1, {{"n", Scalar::exact(4L)}}));
  CHECK(row.m == Scalar::exact(6L));
  CHECK(row.derived_bound == Scalar::exact(72L));

  auto zero = lco::bound_certificate(
      builtin_seq("constant", 8, {{"c", Scalar::exact(0L)}}));
  CHECK(zero.m == Scalar::exact(0L));
  CHECK(zero.derived_bound == Scalar::exact(0L));
}

TEST_CASE("operator respects the 2M^2 bound on random bounded sequences") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(2, 24);
  std::uniform_int_distribution<int> mnum(1, 100);
  std::uniform_int_distribution<int> mden(1, 10);
  for (int trial = 0; trial < 1'000; ++trial) {
    // random rational M in (0, 10]
    const Scalar m = Scalar::rational(mnum(rng), mden(rng) * 10);
    const int n = len(rng);
    std::uniform_int_distribution<int> num(-1000, 1000);
    std::vector<Scalar> terms;
    for (int i = 0; i < n; ++i) {
      // |a_k| <= M by construction
      terms.push_back(m * Scalar::rational(num(rng), 1000));
    }
    Sequence seq = Sequence::finite(std::move(terms));
    Sequence img = lco::apply_l(seq);
    const Scalar bound = Scalar::exact(2L) * m * m;
    for (std::int64_t k = 0; k < img.size(); ++k) {
      Scalar v = img.term_at(k);
      if (v < Scalar::exact(0L)) v = -v;
      CHECK(v <= bound);
    }
  }
}

TEST_CASE("convergence diagnosis on the worked families") {
  const Scalar eps = Scalar::rational(1, 1'000'000);
  auto conv =
      lco::diagnose_convergence(builtin_seq("perturbed_const", 128), 16, eps);
  CHECK(conv.verdict == ConvergenceDiagnosis::Verdict::Converges);
  REQUIRE(conv.limit_estimate.has_value());
  Scalar err = *conv.limit_estimate - Scalar::exact(1L);
  if (err < Scalar::exact(0L)) err = -err;
  CHECK(err <= eps);

  auto div = lco::diagnose_convergence(
      lco::materialize(lco::SeqSpec::closed_form("k", {}), 128), 16, eps);
  CHECK(div.verdict == ConvergenceDiagnosis::Verdict::DivergesUnbounded);

  auto osc =
      lco::diagnose_convergence(builtin_seq("alternating", 128), 16, eps);
  CHECK(osc.verdict == ConvergenceDiagnosis::Verdict::Oscillates);
}

TEST_CASE("decay estimation: constant-ratio input recovers C and r") {
  Sequence seq = lco::materialize(
      lco::SeqSpec::closed_form("3*(1/2)^k", {}), 64);
  auto est = lco::estimate_decay(seq);
  CHECK(est.valid);
  CHECK(est.n == 0);
  CHECK(est.c == Scalar::exact(3L));
  CHECK(est.r == Scalar::rational(1, 2));
  CHECK(est.residual <= Scalar::exact(0L));
}

TEST_CASE("decay estimation on a mixed-ratio explicit sequence") {
  auto est = lco::estimate_decay(
      explicit_seq({"5", "4", "2", "1", "1/2", "1/4", "1/8"}));
  CHECK(est.valid);
  CHECK(est.n == 0);
  CHECK(est.r == Scalar::rational(4, 5));
  CHECK(est.c == Scalar::exact(5L));
  // spot check the envelope at k=2: 2 <= 5*(16/25)
  CHECK(Scalar::exact(2L) <= est.c * est.r.pow_int(2));
}

TEST_CASE("sequences with limit above zero get no decay certificate") {
  auto est = lco::estimate_decay(builtin_seq("harmonic_shift", 64));
  CHECK_FALSE(est.valid);
  CHECK(est.r >= Scalar::rational(63, 64));
}

TEST_CASE("decay estimation requires strictly positive terms") {
  CHECK_THROWS_AS(lco::estimate_decay(explicit_seq({"1", "0", "1"})),
                  lco::NonPositiveTermError);
  CHECK_THROWS_AS(lco::estimate_decay(explicit_seq({"1", "-2", "1"})),
                  lco::NonPositiveTermError);
}

TEST_CASE("iterated decay prediction squares C and r") {
  lco::DecayEstimate base;
  base.c = Scalar::exact(3L);
  base.r = Scalar::rational(1, 2);
  base.valid = true;

  auto same = lco::predict_iterated_decay(base, 0);
  CHECK(same.c == Scalar::exact(3L));
  CHECK(same.r == Scalar::rational(1, 2));

  auto once = lco::predict_iterated_decay(base, 1);
  CHECK(once.c == Scalar::exact(9L));
  CHECK(once.r == Scalar::rational(1, 4));

  auto twice = lco::predict_iterated_decay(base, 2);
  CHECK(twice.c == Scalar::exact(81L));
  CHECK(twice.r == Scalar::rational(1, 16));

  base.valid = false;
  CHECK_THROWS_AS(lco::predict_iterated_decay(base, 1),
                  lco::InvalidEstimateError);
}

// Monotonicity alone does not force a nonnegative image: (100, 2, 1) is
// positive and decreasing yet b_1 = 4 - 100 < 0. Nonnegativity needs the
// ratio condition (log-concavity), which geometric tails satisfy.
TEST_CASE("monotone positive input can still produce a negative image") {
  Sequence steep = explicit_seq({"100", "2", "1"});
  CHECK(lco::detect_monotone(steep).kind == MonotoneKind::Decreasing);
  CHECK(lco::apply_l(steep).term_at(1) == Scalar::exact(-96L));
}

TEST_CASE("monotone inputs with non-increasing ratios have nonneg interiors") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> rnum(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    // geometric with random ratio in (0,1): decreasing, ratios constant
    const int p = rnum(rng);
    Sequence seq = lco::materialize(
        lco::builtin_family("geometric",
                            {{"r", Scalar::rational(p, p + rnum(rng))}}),
        24);
    REQUIRE(lco::detect_monotone(seq).kind == MonotoneKind::Decreasing);
    Sequence img = lco::apply_l(seq);
    for (std::int64_t k = 1; k < img.size(); ++k) {
      CHECK(img.term_at(k) >= Scalar::exact(0L));
    }
  }
}

TEST_CASE("log-concave positive sequences have non-increasing ratios") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> len(3, 6);
  std::uniform_int_distribution<int> entry(1, 9);
  int checked = 0;
  for (int attempt = 0; attempt < 5'000 && checked < 100; ++attempt) {
    const int n = len(rng);
    std::vector<Scalar> terms;
    for (int i = 0; i < n; ++i) {
      terms.push_back(Scalar::exact(static_cast<long>(entry(rng))));
    }
    Sequence seq = Sequence::truncated(std::move(terms));
    if (lco::check_log_concave(seq).status != lco::LcStatus::NonNegative) {
      continue;
    }
    ++checked;
    for (std::int64_t k = 1; k + 1 < seq.size(); ++k) {
      CHECK(seq.term_at(k + 1) / seq.term_at(k) <=
            seq.term_at(k) / seq.term_at(k - 1));
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("combined monotone criterion on a decreasing convergent input") {
  auto crit = lco::monotone_convergence_criterion(
      builtin_seq("perturbed_const", 128));
  CHECK(crit.satisfied);
  CHECK(crit.monotone.kind == MonotoneKind::Decreasing);
  CHECK(crit.image_diagnosis.verdict ==
        ConvergenceDiagnosis::Verdict::Converges);

  auto alt = lco::monotone_convergence_criterion(builtin_seq("alternating", 128));
  CHECK_FALSE(alt.satisfied);
}
