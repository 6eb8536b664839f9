// lco: sequence analysis under the log-concave operator.
//
// Subcommands: eval, apply, probe, analyze, series. Specs come from
// --expr / --builtin / --explicit / --spec-file; reports are JSON (or
// CSV for term lists) and are byte-identical across reruns.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lco/report.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitSpecError = 2;
constexpr int kExitWitness = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
  std::string command;
  std::optional<std::string> expr;
  std::optional<std::string> builtin;
  std::optional<std::string> explicit_terms;
  std::optional<std::string> spec_file;
  std::vector<std::string> params;
  std::int64_t horizon = 128;
  int depth = 3;
  std::string mode = "exact";
  std::string eps = "1/1000000000";
  std::int64_t window = 16;
  bool expect_nonneg = false;
  std::string format = "json";
  std::optional<std::string> out;
  std::size_t digit_budget = lco::kDefaultDigitBudget;
};

lco::ParamMap parse_params(const std::vector<std::string>& raw) {
  lco::ParamMap params;
  for (const std::string& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw lco::ParseError(0, "--param expects NAME=VALUE, got '" + p + "'");
    }
    params.emplace(p.substr(0, eq), lco::Scalar::parse(p.substr(eq + 1)));
  }
  return params;
}

lco::SeqSpec spec_from_flags(const RunConfig& cfg) {
  const lco::ParamMap params = parse_params(cfg.params);
  if (cfg.expr) return lco::SeqSpec::closed_form(*cfg.expr, params);
  if (cfg.builtin) return lco::builtin_family(*cfg.builtin, params);
  std::vector<lco::Scalar> terms;
  std::stringstream ss(*cfg.explicit_terms);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // trim spaces
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw lco::ParseError(0, "--explicit has an empty term");
    }
    terms.push_back(lco::Scalar::parse(item.substr(b, e - b + 1)));
  }
  if (terms.empty()) throw lco::ParseError(0, "--explicit has no terms");
  return lco::SeqSpec::explicit_terms(std::move(terms));
}

struct RunResult {
  lco::Json report;
  std::string csv;  // set only for csv format
  int exit_code = kExitOk;
};

lco::Json terms_with_index_json(const lco::Sequence& seq) {
  lco::Json arr = lco::Json::array();
  for (std::int64_t k = 0; k < seq.size(); ++k) {
    lco::Json row;
    row["k"] = k;
    row["value"] = seq.term_at(k).str();
    arr.push_back(row);
  }
  return arr;
}

std::string terms_csv(const lco::Sequence& seq) {
  std::string csv = "k,value\n";
  for (std::int64_t k = 0; k < seq.size(); ++k) {
    csv += std::to_string(k) + "," + seq.term_at(k).str() + "\n";
  }
  return csv;
}

RunResult run_one(const RunConfig& cfg, const lco::SeqSpec& spec) {
  const bool float_mode = cfg.mode == "float";
  const lco::NumericMode mode =
      float_mode
          ? lco::NumericMode::float_mode(lco::Scalar::parse(cfg.eps).to_double())
          : lco::NumericMode::exact_mode();
  lco::Sequence seq = float_mode ? lco::materialize_float(spec, cfg.horizon)
                                 : lco::materialize(spec, cfg.horizon);

  RunResult result;
  lco::Json& res = result.report;

  if (cfg.command == "eval") {
    res["kind"] = seq.is_finite() ? "finite" : "truncated";
    res["terms"] = terms_with_index_json(seq);
    if (cfg.format == "csv") result.csv = terms_csv(seq);
    return result;
  }

  if (cfg.command == "apply") {
    lco::Sequence image = lco::apply_l(seq);
    res["kind"] = image.is_finite() ? "finite" : "truncated";
    res["boundaryIndices"] = lco::boundary_indices_of(seq);
    res["terms"] = terms_with_index_json(image);
    if (cfg.format == "csv") result.csv = terms_csv(image);
    return result;
  }

  if (cfg.command == "probe") {
    lco::DepthReport report =
        lco::probe_depth(seq, cfg.depth, mode, cfg.digit_budget);
    res = lco::depth_report_json(report);
    if (cfg.expect_nonneg && report.witness) result.exit_code = kExitWitness;
    return result;
  }

  if (cfg.command == "analyze") {
    lco::LcCheck lc = lco::check_log_concave(seq, mode);
    res["logConcave"] = lco::lc_check_json(lc);
    res["monotone"] = lco::monotone_json(lco::detect_monotone(seq));
    res["bound"] = lco::bound_certificate_json(lco::bound_certificate(seq));
    const lco::Scalar eps = lco::Scalar::parse(cfg.eps);
    res["convergence"] = lco::convergence_json(
        lco::diagnose_convergence(seq, cfg.window, eps));
    try {
      res["decay"] = lco::decay_json(lco::estimate_decay(seq));
    } catch (const lco::NonPositiveTermError& e) {
      lco::Json err;
      err["error"] = e.code();
      err["k"] = e.index();
      res["decay"] = err;
    }
    lco::MonotoneCriterion crit =
        lco::monotone_convergence_criterion(seq, cfg.window, eps);
    res["monotoneConvergenceCriterion"] = lco::monotone_criterion_json(crit);
    lco::Json satisfied = lco::Json::array();
    if (lc.status == lco::LcStatus::NonNegative) satisfied.push_back("log_concave");
    if (crit.satisfied) satisfied.push_back("monotone_with_convergent_image");
    if (res["decay"].contains("valid") && res["decay"]["valid"] == true) {
      satisfied.push_back("exponential_decay_certificate");
    }
    satisfied.push_back("operator_bound_2M2");  // always constructible
    res["criteriaSatisfied"] = satisfied;
    if (cfg.expect_nonneg && lc.witness) result.exit_code = kExitWitness;
    return result;
  }

  if (cfg.command == "series") {
    std::optional<lco::DecayEstimate> decay;
    try {
      lco::DecayEstimate est = lco::estimate_decay(seq);
      if (est.valid) decay = est;
    } catch (const lco::NonPositiveTermError&) {
      // series report is still meaningful without a decay certificate
    }
    lco::SeriesReport report =
        lco::l_series_report(seq, cfg.depth, decay, cfg.digit_budget);
    res = lco::series_report_json(report);
    return result;
  }

  throw lco::Error("Internal", "unhandled command " + cfg.command);
}

std::vector<nlohmann::json> load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lco::IoError("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // Whole-file JSON object first, then JSONL batch.
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.is_array()) return std::vector<nlohmann::json>(j.begin(), j.end());
    return {j};
  } catch (const nlohmann::json::parse_error&) {
    std::vector<nlohmann::json> specs;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        specs.push_back(nlohmann::json::parse(line));
      } catch (const nlohmann::json::parse_error& e) {
        throw lco::ParseError(e.byte, "spec file line " +
                                          std::to_string(lineno) +
                                          " is not valid JSON");
      }
    }
    if (specs.empty()) throw lco::ParseError(0, "spec file is empty");
    return specs;
  }
}

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (!cfg.out) {
    std::cout << payload;
    return;
  }
  std::ofstream out(*cfg.out, std::ios::binary);
  if (!out) throw lco::IoError("cannot open output path '" + *cfg.out + "'");
  out << payload;
  if (!out) throw lco::IoError("failed writing to '" + *cfg.out + "'");
}

int run(const RunConfig& cfg) {
  std::vector<std::pair<lco::SeqSpec, nlohmann::json>> specs;
  if (cfg.spec_file) {
    for (const nlohmann::json& j : load_spec_file(*cfg.spec_file)) {
      specs.emplace_back(lco::seqspec_from_json(j), j);
    }
  } else {
    lco::SeqSpec s = spec_from_flags(cfg);
    specs.emplace_back(s, lco::seqspec_json(s));
  }

  int exit_code = kExitOk;
  lco::Json report;
  std::string csv;
  if (specs.size() == 1) {
    RunResult r = run_one(cfg, specs[0].first);
    exit_code = r.exit_code;
    report["input"] = lco::seqspec_json(specs[0].first);
    report["results"] = r.report;
    csv = r.csv;
  } else {
    lco::Json items = lco::Json::array();
    for (const auto& [spec, raw] : specs) {
      RunResult r = run_one(cfg, spec);
      if (r.exit_code != kExitOk) exit_code = r.exit_code;
      lco::Json item;
      item["input"] = lco::seqspec_json(spec);
      item["results"] = r.report;
      items.push_back(item);
    }
    report["input"] = {{"kind", "batch"}, {"count", specs.size()}};
    report["results"] = {{"items", items}};
  }
  report["version"] = kVersion;

  if (cfg.format == "csv") {
    if (csv.empty()) {
      throw lco::ParseError(0,
                            "csv format is only available for single-spec "
                            "eval/apply runs");
    }
    write_output(cfg, csv);
  } else {
    write_output(cfg, report.dump(2) + "\n");
  }
  return exit_code;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, bool with_depth,
                      bool with_expect = false) {
  auto* expr = cmd->add_option("--expr", cfg.expr, "closed-form expression in k");
  auto* builtin =
      cmd->add_option("--builtin", cfg.builtin, "builtin family name");
  auto* expl = cmd->add_option("--explicit", cfg.explicit_terms,
                               "comma-separated explicit terms");
  auto* file = cmd->add_option("--spec-file", cfg.spec_file,
                               "JSON spec file (object, array, or JSONL)");
  expr->excludes(builtin)->excludes(expl)->excludes(file);
  builtin->excludes(expl)->excludes(file);
  expl->excludes(file);
  cmd->add_option("--param", cfg.params, "NAME=VALUE parameter (repeatable)");
  cmd->add_option("--horizon", cfg.horizon, "materialization horizon")
      ->check(CLI::PositiveNumber);
  if (with_depth) {
    cmd->add_option("--depth", cfg.depth, "operator iteration depth")
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--mode", cfg.mode, "numeric mode")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--eps", cfg.eps, "tolerance as a rational, e.g. 1/1000000");
  cmd->add_option("--window", cfg.window, "convergence tail window")
      ->check(CLI::PositiveNumber);
  if (with_expect) {
    cmd->add_flag("--expect-nonneg", cfg.expect_nonneg,
                  "exit 3 when a negativity witness is found");
  }
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", cfg.out, "output path (default stdout)");
  cmd->callback([cmd, &cfg]() { cfg.command = cmd->get_name(); });
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* budget = std::getenv("LCO_DIGIT_BUDGET")) {
    cfg.digit_budget = static_cast<std::size_t>(std::strtoull(budget, nullptr, 10));
    if (cfg.digit_budget == 0) {
      std::cerr << "invalid LCO_DIGIT_BUDGET\n";
      return kExitUsage;
    }
  }

  CLI::App app{"sequence analysis under the log-concave operator"};
  app.require_subcommand(1);
  add_common_flags(app.add_subcommand("eval", "materialize a sequence"), cfg,
                   false);
  add_common_flags(app.add_subcommand("apply", "apply the operator once"),
                   cfg, false);
  add_common_flags(
      app.add_subcommand("probe", "probe i-fold log-concavity"), cfg, true,
      true);
  add_common_flags(
      app.add_subcommand("analyze", "run the full diagnostic battery"), cfg,
      false, true);
  add_common_flags(
      app.add_subcommand("series", "partial sums and comparison bounds"), cfg,
      true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    RunConfig local = cfg;
    // exactly one spec source
    const int sources = (cfg.expr ? 1 : 0) + (cfg.builtin ? 1 : 0) +
                        (cfg.explicit_terms ? 1 : 0) + (cfg.spec_file ? 1 : 0);
    if (sources != 1) {
      std::cerr << "exactly one of --expr/--builtin/--explicit/--spec-file "
                   "is required\n";
      return kExitUsage;
    }
    if ((cfg.command == "probe" || cfg.command == "series") &&
        cfg.horizon <= cfg.depth) {
      std::cerr << "--horizon must exceed --depth\n";
      return kExitUsage;
    }
    return run(local);
  } catch (const lco::ParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const lco::EvalError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const lco::UnknownFamilyError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const lco::MissingParamError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const lco::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
