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

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbagslf {

// Argument names are non-empty tokens without whitespace or commas.
using ArgumentId = std::string;
using ArgumentSet = std::set<ArgumentId>;

// Directed relation pair, ordered (source, target).
using Edge = std::pair<ArgumentId, ArgumentId>;
using EdgeSet = std::set<Edge>;

struct InitialStrength {
  ArgumentId id;
  double strength;
};

bool is_valid_argument_id(std::string_view id);

// Throws StrengthOutOfRange unless 0 <= value <= 1.
void check_strength(double value, std::string_view what);

// Quantitative bipolar argumentation graph: arguments with initial strengths
// in [0, 1], plus disjoint attack and support relations. Immutable; obtain
// instances through build_qbag.
class Qbag {
 public:
  Qbag() = default;

  const std::map<ArgumentId, double>& initial_strengths() const {
    return tau_;
  }
  ArgumentSet arguments() const;
  std::size_t size() const { return tau_.size(); }
  bool empty() const { return tau_.empty(); }
  bool contains(const ArgumentId& id) const { return tau_.contains(id); }
  double initial_strength(const ArgumentId& id) const;

  const EdgeSet& attacks() const { return att_; }
  const EdgeSet& supports() const { return supp_; }

  // Copy with tau(id) replaced; throws UnknownArgument / StrengthOutOfRange.
  Qbag with_initial_strength(const ArgumentId& id, double value) const;

  friend bool operator==(const Qbag& lhs, const Qbag& rhs) {
    return lhs.tau_ == rhs.tau_ && lhs.att_ == rhs.att_ &&
           lhs.supp_ == rhs.supp_;
  }

 private:
  friend Qbag build_qbag(std::span<const InitialStrength>,
                         std::span<const Edge>, std::span<const Edge>);
  friend Qbag restrict_to(const Qbag&, const ArgumentSet&);

  Qbag(std::map<ArgumentId, double> tau, EdgeSet att, EdgeSet supp);

  std::map<ArgumentId, double> tau_;
  EdgeSet att_;
  EdgeSet supp_;
};

// Validates and assembles a QBAG. Errors: DuplicateArgument, InvalidArgumentId,
// StrengthOutOfRange, DanglingEndpoint, RelationOverlap (checked in that
// order). Self-loops are accepted here; evaluation rejects them as cycles.
Qbag build_qbag(std::span<const InitialStrength> args,
                std::span<const Edge> attacks, std::span<const Edge> supports);

inline Qbag build_qbag(const std::vector<InitialStrength>& args,
                       const std::vector<Edge>& attacks,
                       const std::vector<Edge>& supports) {
  return build_qbag(std::span<const InitialStrength>(args),
                    std::span<const Edge>(attacks),
                    std::span<const Edge>(supports));
}

ArgumentSet attackers(const Qbag& g, const ArgumentId& x);
ArgumentSet supporters(const Qbag& g, const ArgumentId& x);

// True iff a directed path of length >= 1 leads from x to y over att ∪ supp.
bool reaches(const Qbag& g, const ArgumentId& x, const ArgumentId& y);

// Every argument reachable from `from` by a path of length >= 1.
ArgumentSet reachable_from(const Qbag& g, const ArgumentId& from);

bool is_acyclic(const Qbag& g);

// Induced sub-graph on `keep`; throws UnknownArgument if keep ⊄ args.
Qbag restrict_to(const Qbag& g, const ArgumentSet& keep);

// Containment: small.args ⊆ large.args, relations contained, tau agrees.
bool is_sub_qbag(const Qbag& small, const Qbag& large);

// Kahn's algorithm; among ready arguments the lexicographically smallest id
// goes first. Throws CyclicGraph.
std::vector<ArgumentId> topological_order(const Qbag& g);

}  // namespace qbagslf
