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

#include "qbagslf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qbagslf/error.hpp"

namespace qbagslf::io {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the character that failed.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) +
                                            ", column " + std::to_string(column) +
                                            ": " + e.what());
  }
}

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidDocument, path + ": " + what);
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path, "missing key \"" + key + "\"");
  return *it;
}

void check_envelope(const Json& doc, std::string_view kind, const std::string& path,
                    bool required) {
  if (!doc.is_object()) invalid(path, "expected an object");
  const bool has_version = doc.contains("format_version");
  const bool has_kind = doc.contains("kind");
  if (required && !has_version) invalid(path, "missing key \"format_version\"");
  if (has_version) {
    const auto& v = doc["format_version"];
    if (!v.is_string() || v.get<std::string>() != kFormatVersion) {
      invalid(path + ".format_version", "unsupported format version " + v.dump());
    }
  }
  if (required && !has_kind) invalid(path, "missing key \"kind\"");
  if (has_kind) {
    const auto& k = doc["kind"];
    if (!k.is_string()) invalid(path + ".kind", "expected a string");
    const auto value = k.get<std::string>();
    if (value != "qbag" && value != "chain") invalid(path + ".kind", "unknown kind \"" + value + "\"");
    if (value != kind) {
      invalid(path + ".kind", "expected \"" + std::string(kind) + "\", got \"" + value + "\"");
    }
  }
}

std::vector<Edge> read_edges(const Json& payload, const std::string& key,
                             const std::string& path) {
  std::vector<Edge> out;
  auto it = payload.find(key);
  if (it == payload.end()) return out;
  if (!it->is_array()) invalid(path + "." + key, "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& e = (*it)[i];
    const std::string here = path + "." + key + "[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      invalid(here, "expected [source, target]");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

Qbag qbag_from_payload(const Json& payload, const std::string& path) {
  const auto& args = require(payload, "arguments", path);
  if (!args.is_array()) invalid(path + ".arguments", "expected an array");

  std::vector<InitialStrength> strengths;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    const std::string here = path + ".arguments[" + std::to_string(i) + "]";
    if (!a.is_object()) invalid(here, "expected an object");
    const auto& id = require(a, "id", here);
    const auto& initial = require(a, "initial", here);
    if (!id.is_string()) invalid(here + ".id", "expected a string");
    if (!initial.is_number()) invalid(here + ".initial", "expected a number");
    try {
      check_strength(initial.get<double>(), "initial strength");
    } catch (const Error& e) {
      throw Error(e.code(), here + ".initial: " + e.detail());
    }
    strengths.push_back({id.get<std::string>(), initial.get<double>()});
  }
  const auto attacks = read_edges(payload, "attacks", path);
  const auto supports = read_edges(payload, "supports", path);

  try {
    return build_qbag(strengths, attacks, supports);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

Json payload_of(const Qbag& g) {
  Json args = Json::array();
  for (const auto& [id, strength] : g.initial_strengths()) {
    args.push_back(Json{{"id", id}, {"initial", strength}});
  }
  auto edges = [](const EdgeSet& set) {
    Json out = Json::array();
    for (const auto& [from, to] : set) out.push_back(Json::array({from, to}));
    return out;
  };
  return Json{{"arguments", std::move(args)},
              {"attacks", edges(g.attacks())},
              {"supports", edges(g.supports())}};
}

Chain chain_from_document(const Json& doc) {
  check_envelope(doc, "chain", "$", true);
  const auto& steps = require(doc, "steps", "$");
  if (!steps.is_array()) invalid("$.steps", "expected an array");
  if (steps.empty()) throw Error(ErrorCode::EmptyChain, "$.steps: chain has no steps");
  std::vector<Qbag> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string here = "$.steps[" + std::to_string(i) + "]";
    check_envelope(steps[i], "qbag", here, false);
    out.push_back(qbag_from_payload(steps[i], here));
  }
  return Chain(std::move(out));
}

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

}  // namespace

Qbag parse_qbag(std::string_view text) {
  const Json doc = parse_json(text);
  check_envelope(doc, "qbag", "$", true);
  return qbag_from_payload(doc, "$");
}

std::string serialize_qbag(const Qbag& g) {
  Json doc{{"format_version", kFormatVersion}, {"kind", "qbag"}};
  Json payload = payload_of(g);
  for (auto& [key, value] : payload.items()) doc[key] = std::move(value);
  return doc.dump(2) + "\n";
}

Chain parse_chain(std::string_view text) { return chain_from_document(parse_json(text)); }

std::string serialize_chain(const Chain& c) {
  Json steps = Json::array();
  for (const auto& g : c.steps()) steps.push_back(payload_of(g));
  Json doc{{"format_version", kFormatVersion}, {"kind", "chain"}, {"steps", std::move(steps)}};
  return doc.dump(2) + "\n";
}

Chain parse_chain_or_qbag(std::string_view text) {
  const Json doc = parse_json(text);
  if (doc.is_object() && doc.contains("kind") && doc["kind"] == "qbag") {
    check_envelope(doc, "qbag", "$", true);
    return Chain({qbag_from_payload(doc, "$")});
  }
  return chain_from_document(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidDocument, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

std::string export_strengths_csv(const StrengthMatrix& m) {
  std::string out = "step,argument,final_strength\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& [id, value] : m.rows[i].values) {
      if (!value) continue;
      out += std::to_string(i + 1) + "," + id + "," + format_decimal(*value) + "\n";
    }
  }
  return out;
}

std::string export_curve_csv(const FairnessReport& report) {
  std::string out = "x,safety_curve_y,fairness_line_y\n";
  for (const auto& pt : report.curve_points) {
    out += std::to_string(pt.x) + "," + format_decimal(static_cast<double>(pt.y)) + "," +
           format_decimal(report.line.at(pt.x).to_double()) + "\n";
  }
  return out;
}

std::string serialize_report(const FairnessReport& r) {
  Json counts = Json::object();
  for (const auto& [id, s] : r.exceed_counts) counts[id] = s;
  Json curve = Json::array();
  for (const auto& pt : r.curve_points) curve.push_back(Json::array({pt.x, pt.y}));
  Json p = nullptr;
  if (r.p) {
    p = Json::object();
    for (const auto& [id, value] : *r.p) p[id] = value.str();
  }
  Json doc{
      {"threshold", r.threshold},
      {"exceed_counts", std::move(counts)},
      {"ordering", r.ordering},
      {"curve_points", std::move(curve)},
      {"fairness_line",
       Json{{"slope", r.line.slope.str()},
            {"start", Json::array({r.line.start.x, r.line.start.y})},
            {"end", Json::array({r.line.end.x, r.line.end.y})}}},
      {"gini_area", r.gini_area.str()},
      {"gini_score", round_to(r.gini_score, 5)},
      {"p", std::move(p)},
      {"base_b", r.base_b ? Json(*r.base_b) : Json(nullptr)},
      {"shannon_score", round_to(r.shannon_score, 5)},
  };
  return doc.dump(2) + "\n";
}

}  // namespace qbagslf::io
