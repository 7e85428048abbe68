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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qbagslf/chain.hpp"
#include "qbagslf/rational.hpp"

namespace qbagslf {

// Safety, liveness and fairness of a topic set along a chain, judged against
// a threshold of justification t. A strength counts as justified when it is
// >= t; exact comparisons, no epsilon.

struct SlfQuery {
  ArgumentSet topics;
  double threshold = 0.0;
};

// Throws EmptyTopic, TopicNotInChain (a topic missing from some row) or
// StrengthOutOfRange (threshold outside [0, 1]).
void validate_query(const StrengthMatrix& m, const SlfQuery& q);

// sigma_i(x) for every row i. Throws TopicNotInChain.
std::vector<double> trajectory(const StrengthMatrix& m, const ArgumentId& x);

bool is_strongly_safe(const StrengthMatrix& m, const SlfQuery& q);
bool is_weakly_safe(const StrengthMatrix& m, const SlfQuery& q);

// Number of switches between "below t" (sigma < t) and "at or above t"
// along the trajectory, i.e. the largest k with a k-fluctuation.
std::int64_t fluctuation_count(const StrengthMatrix& m, const ArgumentId& x,
                               double threshold);

// Every topic fluctuates at least once.
bool is_live(const StrengthMatrix& m, const SlfQuery& q);

// Some singleton strongly safe => T strongly safe.
bool is_ideally_fair(const StrengthMatrix& m, const SlfQuery& q);
// Some singleton weakly safe => T weakly safe.
bool is_lively_fair(const StrengthMatrix& m, const SlfQuery& q);
// Some singleton strongly safe => T weakly safe.
bool is_cautiously_fair(const StrengthMatrix& m, const SlfQuery& q);

// Number of rows with sigma(x) >= t.
std::int64_t exceed_count(const StrengthMatrix& m, const ArgumentId& x,
                          double threshold);

struct CurvePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct FairnessLine {
  Rational slope;
  CurvePoint start;
  CurvePoint end;
  Rational at(std::int64_t x) const { return slope * Rational(x); }
};

// Topics sorted by increasing exceed count, ties by id.
std::vector<ArgumentId> exceedance_ordering(const StrengthMatrix& m,
                                            const SlfQuery& q);

// Breakpoints (0,0), (1,c1), ..., (|T|, sum S) of the cumulative curve of
// ascending exceed counts. The curve interpolates linearly between them.
std::vector<CurvePoint> safety_curve(const StrengthMatrix& m,
                                     const SlfQuery& q);

FairnessLine fairness_line(const StrengthMatrix& m, const SlfQuery& q);

// Exact area between the fairness line and the safety curve on [0, |T|].
Rational gini_unnormalized(const StrengthMatrix& m, const SlfQuery& q);

// 2 / (1 + exp(-area)) - 1, in [0, 1).
double gini_fairness(const StrengthMatrix& m, const SlfQuery& q);

using Distribution = std::map<ArgumentId, Rational>;

// p(x) = S(x) / sum S; std::nullopt when no topic ever reaches t.
std::optional<Distribution> exceed_distribution(const StrengthMatrix& m,
                                                const SlfQuery& q);

// Least common multiple of the lowest-terms denominators.
std::int64_t shannon_base(const Distribution& dist);

// Entropy of p in base shannon_base(p); 1 when p is undefined.
double shannon_fairness(const StrengthMatrix& m, const SlfQuery& q);

// Building blocks over raw exceed counts, shared by the matrix-level
// functions above.
namespace counts {

std::vector<CurvePoint> cumulative_curve(std::span<const std::int64_t> counts);
Rational line_slope(std::span<const std::int64_t> counts);
Rational area_between(std::span<const std::int64_t> counts);
double sigmoid_normalize(const Rational& area);
std::optional<std::vector<Rational>> distribution(
    std::span<const std::int64_t> counts);
double entropy_score(std::span<const Rational> dist);

}  // namespace counts

struct FairnessReport {
  double threshold = 0.0;
  std::map<ArgumentId, std::int64_t> exceed_counts;
  std::vector<ArgumentId> ordering;
  std::vector<CurvePoint> curve_points;
  FairnessLine line;
  Rational gini_area;
  double gini_score = 0.0;
  std::optional<Distribution> p;
  std::optional<std::int64_t> base_b;
  double shannon_score = 1.0;
};

FairnessReport fairness_report(const StrengthMatrix& m, const SlfQuery& q);

}  // namespace qbagslf
