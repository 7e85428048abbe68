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

#include "qbagslf/chain.hpp"

#include <algorithm>
#include <iterator>

#include "qbagslf/error.hpp"

namespace qbagslf {

Chain::Chain(std::vector<Qbag> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw Error(ErrorCode::EmptyChain, "chain has no steps");
}

namespace {

ArgumentSet intersect(const ArgumentSet& a, const ArgumentSet& b) {
  ArgumentSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

ArgumentSet difference(const ArgumentSet& a, const ArgumentSet& b) {
  ArgumentSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

ArgumentSet keys(const StrengthAssignment& row) {
  ArgumentSet out;
  for (const auto& [id, _] : row.values) out.insert(out.end(), id);
  return out;
}

template <class PairCheck>
bool all_adjacent(const Chain& c, PairCheck check) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!check(c[i], c[i + 1])) return false;
  }
  return true;
}

bool is_strict_sub_qbag(const Qbag& small, const Qbag& large) {
  return is_sub_qbag(small, large) && !(small == large);
}

}  // namespace

ArgumentSet StrengthMatrix::universe() const {
  ArgumentSet out;
  for (const auto& row : rows) {
    for (const auto& [id, _] : row.values) out.insert(id);
  }
  return out;
}

ArgumentSet StrengthMatrix::common() const {
  if (rows.empty()) return {};
  ArgumentSet out = keys(rows.front());
  for (std::size_t i = 1; i < rows.size(); ++i) out = intersect(out, keys(rows[i]));
  return out;
}

bool is_expansion_chain(const Chain& c) {
  return all_adjacent(c, is_strict_sub_qbag);
}

bool is_normal_expansion_chain(const Chain& c) {
  if (!is_expansion_chain(c)) return false;
  return all_adjacent(c, [](const Qbag& before, const Qbag& after) {
    const ArgumentSet added = difference(after.arguments(), before.arguments());
    auto only_new_touch = [&](const EdgeSet& old_edges, const EdgeSet& new_edges) {
      for (const auto& e : new_edges) {
        if (old_edges.contains(e)) continue;
        if (!added.contains(e.first) && !added.contains(e.second)) return false;
      }
      return true;
    };
    EdgeSet old_all = before.attacks();
    old_all.insert(before.supports().begin(), before.supports().end());
    return only_new_touch(old_all, after.attacks()) &&
           only_new_touch(old_all, after.supports());
  });
}

bool is_weak_expansion_chain(const Chain& c) {
  if (!is_expansion_chain(c)) return false;
  return all_adjacent(c, [](const Qbag& before, const Qbag& after) {
    const ArgumentSet old_args = before.arguments();
    for (const auto& x : difference(after.arguments(), old_args)) {
      const ArgumentSet reach = reachable_from(after, x);
      if (!intersect(reach, old_args).empty()) return false;
    }
    return true;
  });
}

ArgumentSet common_arguments(const Chain& c) {
  ArgumentSet out = c.front().arguments();
  for (std::size_t i = 1; i < c.size(); ++i) out = intersect(out, c[i].arguments());
  return out;
}

Chain sweep_chain(const Qbag& g, const ArgumentId& x,
                  std::span<const double> values) {
  if (!g.contains(x)) throw Error(ErrorCode::UnknownArgument, x);
  std::vector<Qbag> steps;
  steps.reserve(values.size());
  for (double v : values) steps.push_back(g.with_initial_strength(x, v));
  return Chain(std::move(steps));
}

std::vector<double> linear_sweep_values(double from, double to,
                                        std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i + 1 == count && count > 1) {
      out.push_back(to);
    } else {
      const double frac = count > 1 ? static_cast<double>(i) /
                                          static_cast<double>(count - 1)
                                    : 0.0;
      out.push_back(std::clamp(from + (to - from) * frac, 0.0, 1.0));
    }
  }
  return out;
}

StrengthMatrix evaluate_chain(const Chain& c, const SemanticsDescriptor& sem) {
  StrengthMatrix m;
  m.rows.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    try {
      m.rows.push_back(evaluate(c[i], sem));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CyclicGraph) throw;
      throw Error(ErrorCode::CyclicGraph, e.detail(), i + 1);
    }
  }
  return m;
}

}  // namespace qbagslf
