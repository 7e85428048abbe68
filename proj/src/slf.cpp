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

#include "qbagslf/slf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qbagslf/error.hpp"

namespace qbagslf {

void validate_query(const StrengthMatrix& m, const SlfQuery& q) {
  if (q.topics.empty()) throw Error(ErrorCode::EmptyTopic, "topic set is empty");
  check_strength(q.threshold, "threshold");
  for (const auto& x : q.topics) trajectory(m, x);
}

std::vector<double> trajectory(const StrengthMatrix& m, const ArgumentId& x) {
  std::vector<double> out;
  out.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& row = m.rows[i];
    if (!row.contains(x)) {
      throw Error(ErrorCode::TopicNotInChain,
                  x + " is absent from step " + std::to_string(i + 1));
    }
    out.push_back(row.at(x));
  }
  return out;
}

namespace {

bool singleton_strongly_safe(const StrengthMatrix& m, const ArgumentId& x,
                             double t) {
  const auto traj = trajectory(m, x);
  return std::all_of(traj.begin(), traj.end(), [t](double s) { return s >= t; });
}

bool singleton_weakly_safe(const StrengthMatrix& m, const ArgumentId& x,
                           double t) {
  return m.rows.back().at(x) >= t;
}

std::vector<std::int64_t> ordered_counts(const StrengthMatrix& m,
                                         const SlfQuery& q) {
  std::vector<std::int64_t> out;
  for (const auto& x : q.topics) out.push_back(exceed_count(m, x, q.threshold));
  return out;
}

}  // namespace

bool is_strongly_safe(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  return std::all_of(q.topics.begin(), q.topics.end(), [&](const auto& x) {
    return singleton_strongly_safe(m, x, q.threshold);
  });
}

bool is_weakly_safe(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  return std::all_of(q.topics.begin(), q.topics.end(), [&](const auto& x) {
    return singleton_weakly_safe(m, x, q.threshold);
  });
}

std::int64_t fluctuation_count(const StrengthMatrix& m, const ArgumentId& x,
                               double threshold) {
  const auto traj = trajectory(m, x);
  std::int64_t switches = 0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    if ((traj[i - 1] >= threshold) != (traj[i] >= threshold)) ++switches;
  }
  return switches;
}

bool is_live(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  return std::all_of(q.topics.begin(), q.topics.end(), [&](const auto& x) {
    return fluctuation_count(m, x, q.threshold) >= 1;
  });
}

bool is_ideally_fair(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  const bool some = std::any_of(q.topics.begin(), q.topics.end(), [&](const auto& x) {
    return singleton_strongly_safe(m, x, q.threshold);
  });
  return !some || is_strongly_safe(m, q);
}

bool is_lively_fair(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  const bool some = std::any_of(q.topics.begin(), q.topics.end(), [&](const auto& x) {
    return singleton_weakly_safe(m, x, q.threshold);
  });
  return !some || is_weakly_safe(m, q);
}

bool is_cautiously_fair(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  const bool some = std::any_of(q.topics.begin(), q.topics.end(), [&](const auto& x) {
    return singleton_strongly_safe(m, x, q.threshold);
  });
  return !some || is_weakly_safe(m, q);
}

std::int64_t exceed_count(const StrengthMatrix& m, const ArgumentId& x,
                          double threshold) {
  const auto traj = trajectory(m, x);
  return std::count_if(traj.begin(), traj.end(),
                       [threshold](double s) { return s >= threshold; });
}

std::vector<ArgumentId> exceedance_ordering(const StrengthMatrix& m,
                                            const SlfQuery& q) {
  validate_query(m, q);
  std::vector<std::pair<std::int64_t, ArgumentId>> keyed;
  for (const auto& x : q.topics) keyed.emplace_back(exceed_count(m, x, q.threshold), x);
  std::sort(keyed.begin(), keyed.end());
  std::vector<ArgumentId> out;
  for (auto& [_, x] : keyed) out.push_back(std::move(x));
  return out;
}

std::vector<CurvePoint> safety_curve(const StrengthMatrix& m,
                                     const SlfQuery& q) {
  validate_query(m, q);
  return counts::cumulative_curve(ordered_counts(m, q));
}

FairnessLine fairness_line(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  const auto s = ordered_counts(m, q);
  const std::int64_t total = std::accumulate(s.begin(), s.end(), std::int64_t{0});
  const auto n = static_cast<std::int64_t>(s.size());
  return FairnessLine{counts::line_slope(s), {0, 0}, {n, total}};
}

Rational gini_unnormalized(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  return counts::area_between(ordered_counts(m, q));
}

double gini_fairness(const StrengthMatrix& m, const SlfQuery& q) {
  return counts::sigmoid_normalize(gini_unnormalized(m, q));
}

std::optional<Distribution> exceed_distribution(const StrengthMatrix& m,
                                                const SlfQuery& q) {
  validate_query(m, q);
  const auto s = ordered_counts(m, q);
  const auto p = counts::distribution(s);
  if (!p) return std::nullopt;
  Distribution out;
  std::size_t i = 0;
  for (const auto& x : q.topics) out.emplace(x, (*p)[i++]);
  return out;
}

std::int64_t shannon_base(const Distribution& dist) {
  std::int64_t b = 1;
  for (const auto& [_, p] : dist) b = std::lcm(b, p.denominator());
  return b;
}

double shannon_fairness(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  const auto p = counts::distribution(ordered_counts(m, q));
  if (!p) return 1.0;
  return counts::entropy_score(*p);
}

namespace counts {

std::vector<CurvePoint> cumulative_curve(std::span<const std::int64_t> counts) {
  std::vector<std::int64_t> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<CurvePoint> points{{0, 0}};
  std::int64_t y = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    y += sorted[i];
    points.push_back({static_cast<std::int64_t>(i + 1), y});
  }
  return points;
}

Rational line_slope(std::span<const std::int64_t> counts) {
  if (counts.empty()) return Rational(0);
  const std::int64_t total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  return Rational(total, static_cast<std::int64_t>(counts.size()));
}

Rational area_between(std::span<const std::int64_t> counts) {
  const auto curve = cumulative_curve(counts);
  const Rational slope = line_slope(counts);
  Rational area;
  for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
    // Difference line - curve is linear on [k, k+1].
    const Rational d0 = slope * Rational(curve[k].x) - Rational(curve[k].y);
    const Rational d1 = slope * Rational(curve[k + 1].x) - Rational(curve[k + 1].y);
    const bool crosses = (d0 > Rational(0) && d1 < Rational(0)) ||
                         (d0 < Rational(0) && d1 > Rational(0));
    if (!crosses) {
      area += abs(d0 + d1) / Rational(2);
    } else {
      area += (d0 * d0 + d1 * d1) / (Rational(2) * (abs(d0) + abs(d1)));
    }
  }
  return area;
}

double sigmoid_normalize(const Rational& area) {
  if (area.is_zero()) return 0.0;
  // 2 / (1 + e^-a) - 1 == tanh(a / 2); saturates to 1.0 in double for large
  // areas, so cap at the largest value below 1.
  const double score = std::tanh(area.to_double() / 2.0);
  return std::min(score, std::nextafter(1.0, 0.0));
}

std::optional<std::vector<Rational>> distribution(
    std::span<const std::int64_t> counts) {
  const std::int64_t total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  if (total == 0) return std::nullopt;
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (auto s : counts) out.emplace_back(s, total);
  return out;
}

double entropy_score(std::span<const Rational> dist) {
  std::int64_t b = 1;
  for (const auto& p : dist) b = std::lcm(b, p.denominator());
  if (b == 1) {
    // One topic holds every exceedance. Alone it is the uniform case;
    // alongside zero-count topics the entropy is 0 in any base.
    return dist.size() == 1 ? 1.0 : 0.0;
  }
  const double log_b = std::log(static_cast<double>(b));
  double h = 0.0;
  for (const auto& p : dist) {
    if (p.is_zero()) continue;
    const double v = p.to_double();
    h -= v * std::log(v) / log_b;
  }
  return h;
}

}  // namespace counts

FairnessReport fairness_report(const StrengthMatrix& m, const SlfQuery& q) {
  validate_query(m, q);
  FairnessReport r;
  r.threshold = q.threshold;
  for (const auto& x : q.topics) r.exceed_counts.emplace(x, exceed_count(m, x, q.threshold));
  r.ordering = exceedance_ordering(m, q);
  r.curve_points = safety_curve(m, q);
  r.line = fairness_line(m, q);
  r.gini_area = gini_unnormalized(m, q);
  r.gini_score = counts::sigmoid_normalize(r.gini_area);
  r.p = exceed_distribution(m, q);
  if (r.p) r.base_b = shannon_base(*r.p);
  r.shannon_score = shannon_fairness(m, q);
  return r;
}

}  // namespace qbagslf
