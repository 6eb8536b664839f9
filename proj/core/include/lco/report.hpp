#pragma once

#include <nlohmann/json.hpp>

#include "lco/analysis.hpp"
#include "lco/operator.hpp"
#include "lco/seqspec.hpp"
#include "lco/sequence.hpp"
#include "lco/series.hpp"

namespace lco {

// Reports use insertion-ordered JSON so identical runs serialize
// byte-identically.
using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& v);
Json terms_json(const std::vector<Scalar>& terms);
// Exact value plus a 12-significant-digit decimal, for sums.
Json sum_json(const Scalar& v);

Json seqspec_json(const SeqSpec& spec);
SeqSpec seqspec_from_json(const nlohmann::json& j);

Json witness_json(const LcWitness& w);
Json depth_report_json(const DepthReport& r);
Json lc_check_json(const LcCheck& c);
Json bound_certificate_json(const BoundCertificate& c);
Json monotone_json(const MonotoneResult& m);
Json convergence_json(const ConvergenceDiagnosis& d);
Json decay_json(const DecayEstimate& e);
Json series_report_json(const SeriesReport& r);
Json monotone_criterion_json(const MonotoneCriterion& c);

}  // namespace lco
