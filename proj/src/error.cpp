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

#include "qbagslf/error.hpp"

namespace qbagslf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateArgument: return "DuplicateArgument";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::RelationOverlap: return "RelationOverlap";
    case ErrorCode::StrengthOutOfRange: return "StrengthOutOfRange";
    case ErrorCode::InvalidArgumentId: return "InvalidArgumentId";
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::EmptyChain: return "EmptyChain";
    case ErrorCode::EmptyTopic: return "EmptyTopic";
    case ErrorCode::TopicNotInChain: return "TopicNotInChain";
    case ErrorCode::UnknownSemantics: return "UnknownSemantics";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& detail,
                    std::optional<std::size_t> step) {
  std::string msg(to_string(code));
  if (step) msg += " at step " + std::to_string(*step);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail,
             std::optional<std::size_t> step)
    : std::runtime_error(compose(code, detail, step)),
      code_(code),
      detail_(detail),
      step_(step) {}

}  // namespace qbagslf
