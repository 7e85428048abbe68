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

#include <span>
#include <vector>

#include "qbagslf/graph.hpp"
#include "qbagslf/semantics.hpp"

namespace qbagslf {

// Ordered, non-empty sequence of QBAGs (a dialogue). Steps are arbitrary
// updates; expansion chains are a classified special case.
class Chain {
 public:
  // Throws EmptyChain.
  explicit Chain(std::vector<Qbag> steps);

  const std::vector<Qbag>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  const Qbag& operator[](std::size_t i) const { return steps_[i]; }
  const Qbag& front() const { return steps_.front(); }
  const Qbag& back() const { return steps_.back(); }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<Qbag> steps_;
};

inline Chain build_chain(std::vector<Qbag> qbags) {
  return Chain(std::move(qbags));
}

// Final strengths per chain position. rows[i] covers exactly steps[i].args.
struct StrengthMatrix {
  std::vector<StrengthAssignment> rows;

  std::size_t size() const { return rows.size(); }
  // Union of all row domains.
  ArgumentSet universe() const;
  // Intersection of all row domains.
  ArgumentSet common() const;
};

// Each step is a strict sub-QBAG of its successor. Vacuously true for
// length-1 chains.
bool is_expansion_chain(const Chain& c);

// Expansion chain where every new relation touches a newly added argument.
bool is_normal_expansion_chain(const Chain& c);

// Expansion chain where no newly added argument reaches an old one.
bool is_weak_expansion_chain(const Chain& c);

ArgumentSet common_arguments(const Chain& c);

// Copies of g with tau(x) set to each of `values` in turn.
// Throws UnknownArgument, EmptyChain, StrengthOutOfRange.
Chain sweep_chain(const Qbag& g, const ArgumentId& x,
                  std::span<const double> values);

// `count` equally spaced values from `from` to `to`, both inclusive.
// count == 1 yields {from}.
std::vector<double> linear_sweep_values(double from, double to,
                                        std::size_t count);

// Throws CyclicGraph carrying the 1-based position of the offending step.
StrengthMatrix evaluate_chain(const Chain& c, const SemanticsDescriptor& sem);

inline StrengthMatrix evaluate_chain(const Chain& c) {
  return evaluate_chain(c, dfquad());
}

}  // namespace qbagslf
