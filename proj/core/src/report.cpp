#include "lco/report.hpp"

namespace lco {

namespace {

const char* status_name(LcStatus s) {
  switch (s) {
    case LcStatus::NonNegative:
      return "nonneg";
    case LcStatus::Fails:
      return "fails";
    case LcStatus::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

const char* verdict_name(ConvergenceDiagnosis::Verdict v) {
  switch (v) {
    case ConvergenceDiagnosis::Verdict::Converges:
      return "converges";
    case ConvergenceDiagnosis::Verdict::DivergesUnbounded:
      return "diverges_unbounded";
    case ConvergenceDiagnosis::Verdict::Oscillates:
      return "oscillates";
    case ConvergenceDiagnosis::Verdict::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

}  // namespace

Json scalar_json(const Scalar& v) { return v.str(); }

Json terms_json(const std::vector<Scalar>& terms) {
  Json arr = Json::array();
  for (const Scalar& t : terms) arr.push_back(t.str());
  return arr;
}

Json sum_json(const Scalar& v) {
  Json j;
  j["exact"] = v.str();
  j["decimal"] = v.decimal(12);
  return j;
}

Json seqspec_json(const SeqSpec& spec) {
  Json j;
  switch (spec.kind) {
    case SeqSpec::Kind::Explicit:
      j["kind"] = "explicit";
      j["terms"] = terms_json(spec.terms);
      return j;
    case SeqSpec::Kind::Builtin:
      j["kind"] = "builtin";
      j["name"] = spec.family;
      break;
    case SeqSpec::Kind::ClosedForm:
      j["kind"] = "expr";
      j["expr"] = spec.expr_text;
      break;
  }
  Json params = Json::object();
  for (const auto& [name, value] : spec.params) params[name] = value.str();
  j["params"] = params;
  return j;
}

SeqSpec seqspec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ParseError(0, "sequence spec must be an object with a 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  ParamMap params;
  if (j.contains("params")) {
    for (const auto& [name, value] : j.at("params").items()) {
      params.emplace(name, Scalar::parse(value.get<std::string>()));
    }
  }
  if (kind == "explicit") {
    std::vector<Scalar> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back(Scalar::parse(t.get<std::string>()));
    }
    return SeqSpec::explicit_terms(std::move(terms));
  }
  if (kind == "builtin") {
    return builtin_family(j.at("name").get<std::string>(), params);
  }
  if (kind == "expr") {
    return SeqSpec::closed_form(j.at("expr").get<std::string>(),
                                std::move(params));
  }
  throw ParseError(0, "unknown spec kind '" + kind + "'");
}

Json witness_json(const LcWitness& w) {
  Json j;
  j["depth"] = w.depth;
  j["k"] = w.index;
  j["value"] = w.value.str();
  return j;
}

Json depth_report_json(const DepthReport& r) {
  Json j;
  j["probedDepth"] = r.probed_depth;
  Json depths = Json::array();
  for (const DepthStatus& s : r.statuses) {
    Json d;
    d["i"] = s.depth;
    d["status"] = status_name(s.status);
    depths.push_back(d);
  }
  j["depths"] = depths;
  j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
  if (r.indeterminate_at) {
    j["indeterminateAt"] = *r.indeterminate_at;
  }
  j["boundaryIndices"] = r.boundary_indices;
  j["verdict"] = r.witness
                     ? "fails_at_depth_" + std::to_string(r.witness->depth)
                 : r.indeterminate_at
                     ? std::string("indeterminate")
                     : "i_fold_log_concave_up_to_" +
                           std::to_string(r.probed_depth);
  return j;
}

Json lc_check_json(const LcCheck& c) {
  Json j;
  j["status"] = status_name(c.status);
  j["witness"] = c.witness ? witness_json(*c.witness) : Json(nullptr);
  if (c.indeterminate_at) j["indeterminateAt"] = *c.indeterminate_at;
  j["boundaryIndices"] = c.boundary_indices;
  return j;
}

Json bound_certificate_json(const BoundCertificate& c) {
  Json j;
  j["M"] = c.m.str();
  j["bound"] = c.derived_bound.str();
  return j;
}

Json monotone_json(const MonotoneResult& m) {
  Json j;
  switch (m.kind) {
    case MonotoneKind::Increasing:
      j["kind"] = "increasing";
      j["from"] = m.from;
      break;
    case MonotoneKind::Decreasing:
      j["kind"] = "decreasing";
      j["from"] = m.from;
      break;
    case MonotoneKind::None:
      j["kind"] = "none";
      break;
  }
  return j;
}

Json convergence_json(const ConvergenceDiagnosis& d) {
  Json j;
  j["verdict"] = verdict_name(d.verdict);
  j["limitEstimate"] =
      d.limit_estimate ? Json(d.limit_estimate->str()) : Json(nullptr);
  j["window"] = d.window;
  j["eps"] = d.eps.str();
  j["thresholdIndex"] =
      d.threshold_index ? Json(*d.threshold_index) : Json(nullptr);
  return j;
}

Json decay_json(const DecayEstimate& e) {
  Json j;
  j["C"] = e.c.str();
  j["r"] = e.r.str();
  j["N"] = e.n;
  j["valid"] = e.valid;
  j["residual"] = e.residual.str();
  return j;
}

Json series_report_json(const SeriesReport& r) {
  Json j;
  j["horizon"] = r.horizon;
  Json sums = Json::array();
  for (const Scalar& s : r.partial_sums) sums.push_back(s.str());
  j["partialSums"] = sums;
  j["total"] = sum_json(r.total);
  Json per_depth = Json::array();
  for (std::size_t i = 0; i < r.l_series_per_depth.size(); ++i) {
    Json d;
    d["i"] = i;
    Json dsums = Json::array();
    for (const Scalar& s : r.l_series_per_depth[i]) dsums.push_back(s.str());
    d["partialSums"] = dsums;
    d["total"] = sum_json(r.l_series_per_depth[i].back());
    per_depth.push_back(d);
  }
  j["lSeriesPerDepth"] = per_depth;
  Json split;
  split["window"] = {r.split_window_lo, r.split_window_hi};
  split["sumB"] = sum_json(r.sum_b);
  split["sumSquares"] = sum_json(r.sum_squares);
  split["sumCross"] = sum_json(r.sum_cross);
  split["identityHolds"] = r.split_identity_holds;
  j["splitSums"] = split;
  j["comparisonBound"] =
      r.comparison_bound ? Json(r.comparison_bound->str()) : Json(nullptr);
  j["boundHolds"] = r.bound_holds ? Json(*r.bound_holds) : Json(nullptr);
  return j;
}

Json monotone_criterion_json(const MonotoneCriterion& c) {
  Json j;
  j["satisfied"] = c.satisfied;
  j["monotone"] = monotone_json(c.monotone);
  j["imageConvergence"] = convergence_json(c.image_diagnosis);
  if (c.satisfied) {
    j["statement"] =
        "criterion satisfied: input monotone and bounded over the window "
        "with convergent L-image; L-limit estimate is within eps of 0";
  }
  return j;
}

}  // namespace lco
