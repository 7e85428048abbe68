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

#include <vector>

#include "qbagslf/chain.hpp"
#include "qbagslf/graph.hpp"

namespace qbagslf::testing {

// Running example: c supports a; then d attacks a and b; then e attacks d.
inline Qbag running_step1() {
  return build_qbag({{"a", 0.5}, {"b", 0.7}, {"c", 0.2}}, {}, {{"c", "a"}});
}

inline Qbag running_step2() {
  return build_qbag({{"a", 0.5}, {"b", 0.7}, {"c", 0.2}, {"d", 1.0}},
                    {{"d", "a"}, {"d", "b"}}, {{"c", "a"}});
}

inline Qbag running_step3() {
  return build_qbag({{"a", 0.5}, {"b", 0.7}, {"c", 0.2}, {"d", 1.0}, {"e", 0.8}},
                    {{"d", "a"}, {"d", "b"}, {"e", "d"}}, {{"c", "a"}});
}

inline Chain running_chain() { return Chain({running_step1(), running_step2(), running_step3()}); }

// f feeds e, c, d; e supports a and attacks b; c and d attack a and support b.
inline Qbag nonmonotonic_graph(double f_strength = 0.5) {
  return build_qbag({{"a", 0.2}, {"b", 0.0}, {"c", 0.0}, {"d", 0.0}, {"e", 0.0},
                     {"f", f_strength}},
                    {{"c", "a"}, {"d", "a"}, {"e", "b"}},
                    {{"e", "a"}, {"c", "b"}, {"d", "b"}, {"f", "c"}, {"f", "d"}, {"f", "e"}});
}

inline Chain three_step_sweep() {
  const std::vector<double> values{0.1, 0.5, 0.9};
  return sweep_chain(nonmonotonic_graph(), "f", values);
}

// Hand-derived closed forms for the sweep graph with tau(f) = s.
inline double sweep_sigma_a(double s) { return 0.2 - 0.2 * s * (1.0 - s); }
inline double sweep_sigma_b(double s) { return s * (1.0 - s); }

}  // namespace qbagslf::testing
