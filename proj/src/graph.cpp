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

#include "qbagslf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

#include "qbagslf/error.hpp"

namespace qbagslf {

bool is_valid_argument_id(std::string_view id) {
  if (id.empty()) return false;
  for (char ch : id) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

void check_strength(double value, std::string_view what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::StrengthOutOfRange,
                std::string(what) + " = " + std::to_string(value) +
                    " is outside [0, 1]");
  }
}

Qbag::Qbag(std::map<ArgumentId, double> tau, EdgeSet att, EdgeSet supp)
    : tau_(std::move(tau)), att_(std::move(att)), supp_(std::move(supp)) {}

ArgumentSet Qbag::arguments() const {
  ArgumentSet out;
  for (const auto& [id, _] : tau_) out.insert(out.end(), id);
  return out;
}

double Qbag::initial_strength(const ArgumentId& id) const {
  auto it = tau_.find(id);
  if (it == tau_.end()) throw Error(ErrorCode::UnknownArgument, id);
  return it->second;
}

Qbag Qbag::with_initial_strength(const ArgumentId& id, double value) const {
  if (!contains(id)) throw Error(ErrorCode::UnknownArgument, id);
  check_strength(value, "initial strength of " + id);
  Qbag copy = *this;
  copy.tau_[id] = value;
  return copy;
}

Qbag build_qbag(std::span<const InitialStrength> args,
                std::span<const Edge> attacks, std::span<const Edge> supports) {
  std::map<ArgumentId, double> tau;
  for (const auto& [id, strength] : args) {
    if (!is_valid_argument_id(id)) {
      throw Error(ErrorCode::InvalidArgumentId, "'" + id + "'");
    }
    check_strength(strength, "initial strength of " + id);
    if (!tau.emplace(id, strength).second) {
      throw Error(ErrorCode::DuplicateArgument, id);
    }
  }

  auto collect = [&tau](std::span<const Edge> edges, std::string_view kind) {
    EdgeSet out;
    for (const auto& edge : edges) {
      for (const auto* end : {&edge.first, &edge.second}) {
        if (!tau.contains(*end)) {
          throw Error(ErrorCode::DanglingEndpoint,
                      std::string(kind) + " (" + edge.first + ", " +
                          edge.second + ") names undeclared argument " + *end);
        }
      }
      out.insert(edge);
    }
    return out;
  };
  EdgeSet att = collect(attacks, "attack");
  EdgeSet supp = collect(supports, "support");

  for (const auto& edge : att) {
    if (supp.contains(edge)) {
      throw Error(ErrorCode::RelationOverlap,
                  "(" + edge.first + ", " + edge.second +
                      ") is both an attack and a support");
    }
  }
  return Qbag(std::move(tau), std::move(att), std::move(supp));
}

namespace {

void require_argument(const Qbag& g, const ArgumentId& x) {
  if (!g.contains(x)) throw Error(ErrorCode::UnknownArgument, x);
}

ArgumentSet sources_into(const EdgeSet& edges, const ArgumentId& x) {
  ArgumentSet out;
  for (const auto& [from, to] : edges) {
    if (to == x) out.insert(from);
  }
  return out;
}

std::map<ArgumentId, std::vector<ArgumentId>> successors(const Qbag& g) {
  std::map<ArgumentId, std::vector<ArgumentId>> next;
  for (const auto& [id, _] : g.initial_strengths()) next[id];
  for (const auto* edges : {&g.attacks(), &g.supports()}) {
    for (const auto& [from, to] : *edges) next[from].push_back(to);
  }
  return next;
}

}  // namespace

ArgumentSet attackers(const Qbag& g, const ArgumentId& x) {
  require_argument(g, x);
  return sources_into(g.attacks(), x);
}

ArgumentSet supporters(const Qbag& g, const ArgumentId& x) {
  require_argument(g, x);
  return sources_into(g.supports(), x);
}

ArgumentSet reachable_from(const Qbag& g, const ArgumentId& from) {
  require_argument(g, from);
  const auto next = successors(g);
  ArgumentSet seen;
  std::vector<ArgumentId> stack = next.at(from);
  while (!stack.empty()) {
    ArgumentId cur = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (const auto& n : next.at(cur)) stack.push_back(n);
  }
  return seen;
}

bool reaches(const Qbag& g, const ArgumentId& x, const ArgumentId& y) {
  require_argument(g, y);
  return reachable_from(g, x).contains(y);
}

std::vector<ArgumentId> topological_order(const Qbag& g) {
  const auto next = successors(g);
  std::map<ArgumentId, std::size_t> in_degree;
  for (const auto& [id, _] : g.initial_strengths()) in_degree[id] = 0;
  for (const auto& [_, targets] : next) {
    for (const auto& t : targets) ++in_degree[t];
  }

  std::priority_queue<ArgumentId, std::vector<ArgumentId>, std::greater<>> ready;
  for (const auto& [id, deg] : in_degree) {
    if (deg == 0) ready.push(id);
  }

  std::vector<ArgumentId> order;
  order.reserve(g.size());
  while (!ready.empty()) {
    ArgumentId cur = ready.top();
    ready.pop();
    for (const auto& t : next.at(cur)) {
      if (--in_degree[t] == 0) ready.push(t);
    }
    order.push_back(std::move(cur));
  }

  if (order.size() != g.size()) {
    std::string stuck;
    for (const auto& [id, deg] : in_degree) {
      if (deg > 0) stuck += (stuck.empty() ? "" : ",") + id;
    }
    throw Error(ErrorCode::CyclicGraph, "cycle through {" + stuck + "}");
  }
  return order;
}

bool is_acyclic(const Qbag& g) {
  try {
    topological_order(g);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CyclicGraph) return false;
    throw;
  }
}

Qbag restrict_to(const Qbag& g, const ArgumentSet& keep) {
  std::map<ArgumentId, double> tau;
  for (const auto& id : keep) tau.emplace(id, g.initial_strength(id));

  auto intersect = [&keep](const EdgeSet& edges) {
    EdgeSet out;
    for (const auto& e : edges) {
      if (keep.contains(e.first) && keep.contains(e.second)) out.insert(e);
    }
    return out;
  };
  return Qbag(std::move(tau), intersect(g.attacks()), intersect(g.supports()));
}

bool is_sub_qbag(const Qbag& small, const Qbag& large) {
  for (const auto& [id, strength] : small.initial_strengths()) {
    auto it = large.initial_strengths().find(id);
    if (it == large.initial_strengths().end() || it->second != strength) {
      return false;
    }
  }
  auto subset = [](const EdgeSet& a, const EdgeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  return subset(small.attacks(), large.attacks()) &&
         subset(small.supports(), large.supports());
}

}  // namespace qbagslf
