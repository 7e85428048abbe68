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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qbagslf/graph.hpp"

namespace qbagslf {

// A modular gradual semantics: an aggregation over the final strengths of an
// argument's attackers and supporters, and an influence step that moves the
// argument's initial strength according to the aggregate. Neighbor strengths
// are passed in ascending ArgumentId order.
struct SemanticsDescriptor {
  std::string name;
  std::function<double(std::span<const double> attacker_values,
                       std::span<const double> supporter_values)>
      aggregation;
  std::function<double(double base, double aggregate)> influence;
};

// Final strength per argument; std::nullopt marks an undefined strength.
struct StrengthAssignment {
  std::map<ArgumentId, std::optional<double>> values;

  bool contains(const ArgumentId& id) const { return values.contains(id); }
  // Throws UnknownArgument if absent; undefined entries also throw.
  double at(const ArgumentId& id) const;

  friend bool operator==(const StrengthAssignment&,
                         const StrengthAssignment&) = default;
};

// prod(1 - a) over attackers minus prod(1 - s) over supporters; empty
// products are 1. Positive means net support.
double dfquad_aggregation(std::span<const double> attacker_values,
                          std::span<const double> supporter_values);

// base - base * max(0, -aggregate) + (1 - base) * max(0, aggregate)
double dfquad_influence(double base, double aggregate);

const SemanticsDescriptor& dfquad();

// Looks up a semantics by its name token ("dfquad"). Throws UnknownSemantics.
const SemanticsDescriptor& semantics_by_name(std::string_view name);

// Single pass in topological order. Throws CyclicGraph for cyclic inputs.
// Source arguments keep tau exactly; other strengths are reported rounded
// to 12 decimal places.
StrengthAssignment evaluate(const Qbag& g, const SemanticsDescriptor& sem);

inline StrengthAssignment evaluate(const Qbag& g) {
  return evaluate(g, dfquad());
}

}  // namespace qbagslf
