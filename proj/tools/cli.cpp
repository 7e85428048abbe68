// Copyright 2026 The qbagslf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbagslf/chain.hpp"
#include "qbagslf/error.hpp"
#include "qbagslf/io.hpp"
#include "qbagslf/semantics.hpp"
#include "qbagslf/slf.hpp"

namespace qbagslf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct AnalysisRequest {
  std::string chain_path;
  std::string topics;
  double threshold = 0.0;
  std::string semantics = "dfquad";
  std::string checks = "all";
  std::string format = "text";
};

ArgumentSet parse_topics(const std::string& text) {
  ArgumentSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!is_valid_argument_id(item)) {
      throw Error(ErrorCode::InvalidArgumentId, "topic '" + item + "'");
    }
    out.insert(item);
  }
  if (out.empty()) throw Error(ErrorCode::EmptyTopic, "no topics given");
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string fixed(double value, int decimals) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(decimals);
  ss << value;
  return ss.str();
}

template <class Map, class Fmt>
std::string joined(const Map& map, Fmt fmt) {
  std::string out;
  for (const auto& [k, v] : map) {
    if (!out.empty()) out += ' ';
    out += k + "=" + fmt(v);
  }
  return out;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const Chain chain = io::parse_chain_or_qbag(io::read_text_file(path));
  std::optional<std::size_t> first_cyclic;
  out << "steps: " << chain.size() << "\n";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const bool acyclic = is_acyclic(chain[i]);
    if (!acyclic && !first_cyclic) first_cyclic = i + 1;
    out << "step " << (i + 1) << ": " << chain[i].size() << " arguments, "
        << chain[i].attacks().size() << " attacks, " << chain[i].supports().size()
        << " supports, " << (acyclic ? "acyclic" : "cyclic") << "\n";
  }
  out << "expansion: " << yes_no(is_expansion_chain(chain))
      << ", normal: " << yes_no(is_normal_expansion_chain(chain))
      << ", weak: " << yes_no(is_weak_expansion_chain(chain)) << "\n";
  if (first_cyclic) {
    err << Error(ErrorCode::CyclicGraph, "evaluation requires acyclic steps",
                 first_cyclic)
               .what()
        << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& semantics,
             const std::string& format, std::ostream& out) {
  const Qbag g = io::parse_qbag(io::read_text_file(path));
  const auto sigma = evaluate(g, semantics_by_name(semantics));
  if (format == "csv") {
    out << io::export_strengths_csv(StrengthMatrix{{sigma}});
  } else if (format == "structured") {
    Json doc = Json::object();
    for (const auto& [id, v] : sigma.values) doc[id] = v ? Json(*v) : Json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << joined(sigma.values, [](const std::optional<double>& v) {
      return v ? io::format_decimal(*v) : std::string("undefined");
    }) << "\n";
  }
  return kExitOk;
}

int cmd_analyze(const AnalysisRequest& req, int precision, std::ostream& out) {
  const Chain chain = io::parse_chain_or_qbag(io::read_text_file(req.chain_path));
  const StrengthMatrix m = evaluate_chain(chain, semantics_by_name(req.semantics));
  const SlfQuery q{parse_topics(req.topics), req.threshold};
  validate_query(m, q);

  const bool all = req.checks == "all";
  const bool safety = all || req.checks == "safety";
  const bool liveness = all || req.checks == "liveness";
  const bool fairness = all || req.checks == "fairness";

  std::map<ArgumentId, std::int64_t> fluctuations;
  for (const auto& x : q.topics) fluctuations[x] = fluctuation_count(m, x, q.threshold);

  // Ordered key/value rows shared by the text and structured renderings.
  Json doc = Json::object();
  doc["topics"] = std::vector<std::string>(q.topics.begin(), q.topics.end());
  doc["threshold"] = q.threshold;
  if (safety) {
    doc["strongly_safe"] = is_strongly_safe(m, q);
    doc["weakly_safe"] = is_weakly_safe(m, q);
  }
  if (liveness) {
    doc["fluctuations"] = Json(fluctuations);
    doc["live"] = is_live(m, q);
  }
  std::optional<FairnessReport> report;
  if (fairness) {
    report = fairness_report(m, q);
    doc["ideally_fair"] = is_ideally_fair(m, q);
    doc["lively_fair"] = is_lively_fair(m, q);
    doc["cautiously_fair"] = is_cautiously_fair(m, q);
    doc["exceed_counts"] = Json(report->exceed_counts);
    doc["gini_area"] = report->gini_area.str();
    doc["gini_score"] = fixed(report->gini_score, precision);
    if (report->p) {
      Json p = Json::object();
      for (const auto& [id, v] : *report->p) p[id] = v.str();
      doc["p"] = p;
      doc["base_b"] = *report->base_b;
    } else {
      doc["p"] = nullptr;
      doc["base_b"] = nullptr;
    }
    doc["shannon_score"] = fixed(report->shannon_score, precision);
  }

  if (req.format == "structured") {
    // Scores travel as JSON numbers at the requested precision.
    if (fairness) {
      doc["gini_score"] = std::stod(doc["gini_score"].get<std::string>());
      doc["shannon_score"] = std::stod(doc["shannon_score"].get<std::string>());
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  if (req.format == "csv") {
    out << "topic,exceed_count,fluctuations,strongly_safe,weakly_safe\n";
    for (const auto& x : q.topics) {
      const SlfQuery single{{x}, q.threshold};
      out << x << "," << exceed_count(m, x, q.threshold) << "," << fluctuations[x] << ","
          << bool_str(is_strongly_safe(m, single)) << ","
          << bool_str(is_weakly_safe(m, single)) << "\n";
    }
    return kExitOk;
  }

  for (const auto& [key, value] : doc.items()) {
    out << key << ": ";
    if (value.is_boolean()) {
      out << bool_str(value.get<bool>());
    } else if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_null()) {
      out << "undefined";
    } else if (key == "threshold") {
      out << io::format_decimal(value.get<double>());
    } else if (value.is_array()) {
      std::string joined_topics;
      for (const auto& v : value) {
        joined_topics += (joined_topics.empty() ? "" : ",") + v.get<std::string>();
      }
      out << joined_topics;
    } else if (value.is_object()) {
      std::string line;
      for (const auto& [k, v] : value.items()) {
        line += (line.empty() ? "" : " ") + k + "=" +
                (v.is_string() ? v.get<std::string>() : v.dump());
      }
      out << line;
    } else {
      out << value.dump();
    }
    out << "\n";
  }
  return kExitOk;
}

struct SweepRequest {
  std::string qbag_path;
  std::string argument;
  double from = 0.0;
  double to = 1.0;
  std::size_t steps = 1;
  std::string out_path;
  bool csv = false;
  std::string semantics = "dfquad";
};

int cmd_sweep(const SweepRequest& req, std::ostream& out) {
  const Qbag g = io::parse_qbag(io::read_text_file(req.qbag_path));
  const auto values = linear_sweep_values(req.from, req.to, req.steps);
  const Chain chain = sweep_chain(g, req.argument, values);
  if (req.csv) {
    out << io::export_strengths_csv(evaluate_chain(chain, semantics_by_name(req.semantics)));
    return kExitOk;
  }
  const std::string doc = io::serialize_chain(chain);
  if (req.out_path.empty()) {
    out << doc;
    return kExitOk;
  }
  std::ofstream file(req.out_path, std::ios::binary);
  if (!file || !(file << doc)) {
    throw Error(ErrorCode::InvalidDocument, "cannot write " + req.out_path);
  }
  return kExitOk;
}

int cmd_curve(const AnalysisRequest& req, std::ostream& out) {
  const Chain chain = io::parse_chain_or_qbag(io::read_text_file(req.chain_path));
  const StrengthMatrix m = evaluate_chain(chain, semantics_by_name(req.semantics));
  const SlfQuery q{parse_topics(req.topics), req.threshold};
  out << io::export_curve_csv(fairness_report(m, q));
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Safety, liveness and fairness analysis of QBAG chains", "qbagslf"};
  app.require_subcommand(1);
  const std::vector<std::string> kFormats{"text", "structured", "csv"};

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Parse a chain and classify it");
  validate->add_option("chain", validate_path, "Chain (or single QBAG) document")->required();

  std::string eval_path, eval_semantics = "dfquad", eval_format = "text";
  auto* eval = app.add_subcommand("eval", "Final strengths of a single QBAG");
  eval->add_option("qbag", eval_path, "QBAG document")->required();
  eval->add_option("--semantics", eval_semantics, "Semantics name")->capture_default_str();
  eval->add_option("--format", eval_format, "text, structured or csv")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();

  AnalysisRequest analysis;
  int precision = 5;
  auto* analyze = app.add_subcommand("analyze", "Safety, liveness and fairness report");
  analyze->add_option("chain", analysis.chain_path, "Chain document")->required();
  analyze->add_option("--topics", analysis.topics, "Comma-separated topic ids")->required();
  analyze->add_option("--threshold", analysis.threshold, "Threshold of justification")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  analyze->add_option("--checks", analysis.checks, "safety, liveness, fairness or all")
      ->check(CLI::IsMember({"safety", "liveness", "fairness", "all"}))
      ->capture_default_str();
  analyze->add_option("--semantics", analysis.semantics, "Semantics name")->capture_default_str();
  analyze->add_option("--format", analysis.format, "text, structured or csv")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  analyze->add_option("--precision", precision, "Decimal places for scores")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();

  SweepRequest sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Chain varying one initial strength");
  sweep_cmd->add_option("qbag", sweep.qbag_path, "QBAG document")->required();
  sweep_cmd->add_option("--argument", sweep.argument, "Argument to vary")->required();
  sweep_cmd->add_option("--from", sweep.from, "First value")->required()->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--to", sweep.to, "Last value")->required()->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--steps", sweep.steps, "Number of chain steps")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  auto* out_opt = sweep_cmd->add_option("--out", sweep.out_path, "Write the chain document here");
  auto* csv_opt = sweep_cmd->add_flag("--csv", sweep.csv, "Emit evaluated strengths as CSV");
  out_opt->excludes(csv_opt);
  sweep_cmd->add_option("--semantics", sweep.semantics, "Semantics name")->capture_default_str();

  AnalysisRequest curve_req;
  auto* curve = app.add_subcommand("curve", "Safety curve and fairness line as CSV");
  curve->add_option("chain", curve_req.chain_path, "Chain document")->required();
  curve->add_option("--topics", curve_req.topics, "Comma-separated topic ids")->required();
  curve->add_option("--threshold", curve_req.threshold, "Threshold of justification")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  curve->add_option("--semantics", curve_req.semantics, "Semantics name")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(validate_path, out, err);
    if (*eval) return cmd_eval(eval_path, eval_semantics, eval_format, out);
    if (*analyze) return cmd_analyze(analysis, precision, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*curve) return cmd_curve(curve_req, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qbagslf::cli
