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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qbagslf/chain.hpp"
#include "qbagslf/slf.hpp"

namespace qbagslf::io {

// Document schemas (format_version "1"):
//
//   {"format_version":"1","kind":"qbag",
//    "arguments":[{"id":"a","initial":0.5},...],
//    "attacks":[["d","a"],...],"supports":[["c","a"],...]}
//
//   {"format_version":"1","kind":"chain","steps":[<qbag payload>,...]}
//
// Edge pairs are [source, target]. A step payload may omit the envelope keys.
// Parse failures throw Error with SyntaxError (line/column), InvalidDocument,
// or the graph validation code; details carry the offending field path.

inline constexpr std::string_view kFormatVersion = "1";

Qbag parse_qbag(std::string_view text);
std::string serialize_qbag(const Qbag& g);

Chain parse_chain(std::string_view text);
std::string serialize_chain(const Chain& c);

// Accepts a chain document, or a qbag document as a length-1 chain.
Chain parse_chain_or_qbag(std::string_view text);

// Throws InvalidDocument when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

// Fixed-precision rendering used by every textual export: up to 12
// significant digits, trailing zeros dropped.
std::string format_decimal(double value);

// step,argument,final_strength (1-based step, ids in lexicographic order).
std::string export_strengths_csv(const StrengthMatrix& m);

// x,safety_curve_y,fairness_line_y for x = 0..|T|.
std::string export_curve_csv(const FairnessReport& report);

// Key-ordered JSON rendering of a fairness report.
std::string serialize_report(const FairnessReport& report);

}  // namespace qbagslf::io
