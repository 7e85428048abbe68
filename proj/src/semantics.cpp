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

#include "qbagslf/semantics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include "qbagslf/error.hpp"

namespace qbagslf {

namespace {

// Rounds to 12 decimal places so that decimal inputs yield the decimal
// results exact threshold comparisons expect (0.5 - 0.4 gives 0.1, not
// 0.09999999999999998). Propagation uses the unrounded values.
double snap_decimal(double value) {
  constexpr double kScale = 1e12;
  return std::round(value * kScale) / kScale;
}

}  // namespace

double StrengthAssignment::at(const ArgumentId& id) const {
  auto it = values.find(id);
  if (it == values.end()) throw Error(ErrorCode::UnknownArgument, id);
  if (!it->second) {
    throw Error(ErrorCode::UnknownArgument, "final strength of " + id +
                                                " is undefined");
  }
  return *it->second;
}

double dfquad_aggregation(std::span<const double> attacker_values,
                          std::span<const double> supporter_values) {
  double attack = 1.0;
  for (double v : attacker_values) attack *= 1.0 - v;
  double support = 1.0;
  for (double v : supporter_values) support *= 1.0 - v;
  return attack - support;
}

double dfquad_influence(double base, double aggregate) {
  return base - base * std::max(0.0, -aggregate) +
         (1.0 - base) * std::max(0.0, aggregate);
}

const SemanticsDescriptor& dfquad() {
  static const SemanticsDescriptor instance{
      "dfquad",
      [](std::span<const double> a, std::span<const double> s) {
        return dfquad_aggregation(a, s);
      },
      [](double base, double aggregate) {
        return dfquad_influence(base, aggregate);
      }};
  return instance;
}

const SemanticsDescriptor& semantics_by_name(std::string_view name) {
  if (name == "dfquad") return dfquad();
  throw Error(ErrorCode::UnknownSemantics, std::string(name));
}

StrengthAssignment evaluate(const Qbag& g, const SemanticsDescriptor& sem) {
  const auto order = topological_order(g);

  // Incoming neighbors per target; EdgeSet iteration is sorted by source
  // within each target, giving the ascending-id product order.
  std::map<ArgumentId, std::vector<ArgumentId>> att_in, supp_in;
  for (const auto& [from, to] : g.attacks()) att_in[to].push_back(from);
  for (const auto& [from, to] : g.supports()) supp_in[to].push_back(from);

  std::map<ArgumentId, double> sigma;
  std::map<ArgumentId, double> reported;
  std::vector<double> attack_values, support_values;
  for (const auto& x : order) {
    attack_values.clear();
    support_values.clear();
    if (auto it = att_in.find(x); it != att_in.end()) {
      for (const auto& a : it->second) attack_values.push_back(sigma.at(a));
    }
    if (auto it = supp_in.find(x); it != supp_in.end()) {
      for (const auto& s : it->second) support_values.push_back(sigma.at(s));
    }
    const double base = g.initial_strength(x);
    double value = base;
    const bool has_inputs = !attack_values.empty() || !support_values.empty();
    if (has_inputs) {
      value = sem.influence(base, sem.aggregation(attack_values, support_values));
    }
    assert(value >= 0.0 && value <= 1.0);
    sigma.emplace(x, value);
    reported.emplace(x, has_inputs ? snap_decimal(value) : value);
  }

  StrengthAssignment out;
  for (const auto& [id, v] : reported) out.values.emplace_hint(out.values.end(), id, v);
  return out;
}

}  // namespace qbagslf
