#include "lco/sequence.hpp"

namespace lco {

namespace {
const Scalar kExactZero = Scalar::exact(0L);
const Scalar kFloatZero = Scalar::floating(0.0);
}  // namespace

Sequence::Sequence(Kind kind, std::vector<Scalar> terms,
                   std::optional<std::string> provenance)
    : kind_(kind), terms_(std::move(terms)), provenance_(std::move(provenance)) {
  if (terms_.empty()) throw RangeError("sequence must have at least one term");
}

Sequence Sequence::finite(std::vector<Scalar> terms,
                          std::optional<std::string> provenance) {
  return Sequence(Kind::Finite, std::move(terms), std::move(provenance));
}

Sequence Sequence::truncated(std::vector<Scalar> terms,
                             std::optional<std::string> provenance) {
  return Sequence(Kind::Truncated, std::move(terms), std::move(provenance));
}

const Scalar& Sequence::term_at(std::int64_t k) const {
  if (k >= 0 && k < size()) return terms_[static_cast<std::size_t>(k)];
  if (kind_ == Kind::Truncated && k >= size()) {
    throw HorizonExceededError("read at k=" + std::to_string(k) +
                               " beyond horizon " + std::to_string(size()));
  }
  return terms_.front().is_exact() ? kExactZero : kFloatZero;
}

Sequence Sequence::window(std::int64_t from, std::int64_t to) const {
  if (from < 0 || to >= size() || from > to) {
    throw RangeError("window [" + std::to_string(from) + ", " +
                     std::to_string(to) + "] out of range for length " +
                     std::to_string(size()));
  }
  std::vector<Scalar> slice(terms_.begin() + from, terms_.begin() + to + 1);
  std::string prov = provenance_.value_or("sequence");
  prov += " window offset " + std::to_string(from);
  return finite(std::move(slice), std::move(prov));
}

Sequence materialize(const SeqSpec& spec, std::int64_t horizon) {
  if (horizon < 1) throw RangeError("horizon must be >= 1");
  const bool is_explicit =
      spec.kind == SeqSpec::Kind::Explicit || !spec.terms.empty();
  if (is_explicit) {
    // Horizon ignored: the support is genuine, padding beyond it is real.
    return Sequence::finite(spec.terms, spec.family.empty()
                                            ? std::optional<std::string>{}
                                            : spec.family);
  }
  std::vector<Scalar> terms;
  terms.reserve(static_cast<std::size_t>(horizon));
  for (std::int64_t k = 0; k < horizon; ++k) {
    terms.push_back(eval_expr(*spec.expr, k, spec.params));
  }
  std::optional<std::string> prov;
  if (!spec.family.empty()) {
    prov = spec.family;
  } else if (!spec.expr_text.empty()) {
    prov = spec.expr_text;
  }
  return Sequence::truncated(std::move(terms), std::move(prov));
}

Sequence materialize_float(const SeqSpec& spec, std::int64_t horizon) {
  Sequence exact = materialize(spec, horizon);
  std::vector<Scalar> terms;
  terms.reserve(exact.terms().size());
  for (const Scalar& t : exact.terms()) terms.push_back(t.as_float());
  return exact.is_finite()
             ? Sequence::finite(std::move(terms), exact.provenance())
             : Sequence::truncated(std::move(terms), exact.provenance());
}

}  // namespace lco
