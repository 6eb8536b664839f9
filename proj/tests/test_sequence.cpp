#include <doctest.h>

#include <random>

#include "lco/sequence.hpp"

using lco::Scalar;
using lco::SeqSpec;
using lco::Sequence;

namespace {

Sequence pascal4() {
  return lco::materialize(lco::builtin_family(
                              "binomial_row", {{"n", Scalar::exact(4L)}}),
                          1);
}

}  // namespace

TEST_CASE("finite sequences pad with zero on both sides") {
  Sequence s = pascal4();
  CHECK(s.is_finite());
  CHECK(s.term_at(-1).str() == "0");
  CHECK(s.term_at(7).str() == "0");
  CHECK(s.term_at(2).str() == "6");
}

TEST_CASE("padding is total over a huge signed index range") {
  Sequence s = pascal4();
  for (std::int64_t k : {-1'000'000LL, -17LL, 0LL, 4LL, 5LL, 1'000'000LL}) {
    CHECK_NOTHROW(s.term_at(k));
  }
}

TEST_CASE("truncated sequences refuse reads beyond the horizon") {
  SeqSpec spec = lco::builtin_family("geometric", {{"r", Scalar::rational(1, 2)}});
  Sequence s = lco::materialize(spec, 4);
  CHECK_FALSE(s.is_finite());
  CHECK(s.term_at(-3).str() == "0");
  CHECK(s.term_at(3).str() == "1/8");
  CHECK_THROWS_AS(s.term_at(4), lco::HorizonExceededError);
}

TEST_CASE("materialize evaluates closed forms exactly") {
  SeqSpec geo = lco::builtin_family("geometric", {{"r", Scalar::rational(1, 2)}});
  Sequence s = lco::materialize(geo, 4);
  REQUIRE(s.size() == 4);
  CHECK(s.terms()[0].str() == "1");
  CHECK(s.terms()[1].str() == "1/2");
  CHECK(s.terms()[2].str() == "1/4");
  CHECK(s.terms()[3].str() == "1/8");

  Sequence row = pascal4();
  REQUIRE(row.size() == 5);
  CHECK(row.terms()[1].str() == "4");
  CHECK(row.is_finite());
}

TEST_CASE("materialize surfaces evaluation errors with the offending k") {
  SeqSpec pole = SeqSpec::closed_form("1/(k-2)", {});
  try {
    lco::materialize(pole, 5);
    FAIL("expected EvalError");
  } catch (const lco::EvalError& e) {
    CHECK(e.index() == 2);
    CHECK(e.code() == "DivByZero");
  }
}

TEST_CASE("materialized terms match fresh expression evaluation") {
  SeqSpec spec = SeqSpec::closed_form("(k+1)/(k+2) + r^k",
                                      {{"r", Scalar::rational(2, 3)}});
  const std::int64_t horizon = 64;
  Sequence s = lco::materialize(spec, horizon);
  lco::ExprPtr fresh = lco::parse_expr("(k+1)/(k+2) + r^k");
  for (std::int64_t k = 0; k < horizon; ++k) {
    CHECK(s.term_at(k) == lco::eval_expr(*fresh, k, spec.params));
  }
}

TEST_CASE("window slices and reindexes") {
  Sequence s = pascal4();
  Sequence w = s.window(1, 3);
  REQUIRE(w.size() == 3);
  CHECK(w.term_at(0).str() == "4");
  CHECK(w.term_at(1).str() == "6");
  CHECK(w.term_at(2).str() == "4");
  CHECK(w.provenance().value().find("offset 1") != std::string::npos);

  Sequence all = s.window(0, s.size() - 1);
  CHECK(all.terms() == s.terms());

  CHECK_THROWS_AS(s.window(3, 2), lco::RangeError);
  CHECK_THROWS_AS(s.window(0, 99), lco::RangeError);
}

TEST_CASE("horizon must be positive") {
  SeqSpec spec = SeqSpec::closed_form("k", {});
  CHECK_THROWS_AS(lco::materialize(spec, 0), lco::RangeError);
}
