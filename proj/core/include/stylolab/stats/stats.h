// Copyright 2026 The Stylolab Authors.
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


#ifndef STYLOLAB_STATS_STATS_H_
#define STYLOLAB_STATS_STATS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stylolab/common/feature_table.h"

namespace stylolab::stats {

struct GroupSummary {
  double mean = 0;
  double sd = 0;  // sample standard deviation (n - 1)
  std::size_t n = 0;

  // Throws InputError when fewer than two values are given.
  static GroupSummary FromSample(std::span<const double> values);
};

// I_x(a, b) by Lentz's continued fraction. a, b > 0; x in [0, 1].
double RegularizedIncompleteBeta(double a, double b, double x);

// Two-sided P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double StudentTwoSidedP(double t, double df);

enum class TTestForm { kWelch, kStudent };

struct TTestResult {
  double t = 0;
  double df = 0;
  double p = 1;
  // Both variances are zero: t is 0 (equal means, p = 1) or infinite (p = 0).
  bool degenerate = false;
};

// Throws InputError unless both groups have n >= 2 and finite, non-negative
// summaries.
TTestResult WelchT(const GroupSummary& a, const GroupSummary& b);
TTestResult StudentT(const GroupSummary& a, const GroupSummary& b);
TTestResult TTest(const GroupSummary& a, const GroupSummary& b, TTestForm form);

double PooledSd(const GroupSummary& a, const GroupSummary& b);

// (mean_a - mean_b) / pooled sd. Throws DegenerateError when the pooled sd
// is 0 and InputError when n_a + n_b <= 2.
double CohensD(const GroupSummary& a, const GroupSummary& b);

// "negligible" (< 0.2), "small" (< 0.5), "medium" (< 0.8), "large".
std::string_view EffectBand(double abs_d);

// alpha / m. Throws InputError unless 0 < alpha < 1 and m >= 1.
double BonferroniThreshold(double alpha, std::size_t m);

enum class Correction { kNone, kBonferroni };

std::string_view ToString(Correction c);
std::string_view ToString(TTestForm f);

struct CompareOptions {
  double alpha = 0.05;
  Correction correction = Correction::kBonferroni;
  TTestForm form = TTestForm::kWelch;
  // Number of comparisons used for the correction. Defaults to the number of
  // compared features; 117 reproduces the full-inventory convention.
  std::optional<std::size_t> comparisons;
  int workers = 1;
};

struct ComparisonRow {
  std::string feature;
  GroupSummary a;
  GroupSummary b;
  TTestResult test;
  std::optional<double> d;  // absent when the pooled sd is 0
  bool significant = false;
  // Zero pooled variance or fewer than two finite values in a group; such
  // rows are never significant.
  bool degenerate = false;
  std::string note;
};

struct ComparisonReport {
  std::string label_a = "A";
  std::string label_b = "B";
  std::vector<ComparisonRow> rows;  // input column order
  std::size_t m = 0;
  double alpha = 0.05;
  double threshold = 0.05;
  Correction correction = Correction::kBonferroni;
  TTestForm form = TTestForm::kWelch;

  std::size_t SignificantCount() const;
  // Row indices by decreasing |d|; rows without d go last, ties by name.
  std::vector<std::size_t> OrderByEffect() const;

  // feature,mean_a,sd_a,n_a,mean_b,sd_b,n_b,t,df,p,d,abs_d,band,significant,degenerate
  std::string ToCsv() const;
  // Table sorted by |d|; optionally only significant rows.
  std::string ToMarkdown(bool significant_only = false) const;
};

// Per-column comparison of two tables with identical columns. Non-finite
// entries are dropped per feature. Throws InputError on a column mismatch.
ComparisonReport CompareGroups(const FeatureTable& a, const FeatureTable& b,
                               const CompareOptions& options = {});

}  // namespace stylolab::stats

#endif  // STYLOLAB_STATS_STATS_H_
