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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qbagslf {

enum class ErrorCode {
  DuplicateArgument,
  DanglingEndpoint,
  RelationOverlap,
  StrengthOutOfRange,
  InvalidArgumentId,
  UnknownArgument,
  CyclicGraph,
  EmptyChain,
  EmptyTopic,
  TopicNotInChain,
  UnknownSemantics,
  SyntaxError,
  InvalidDocument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every library failure. `step` is the 1-based
// chain position when the failure is tied to one step of a chain.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> step = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> step_;
};

}  // namespace qbagslf
