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


#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/random.h"
#include "stylolab/stats/stats.h"
#include "support/stats_oracle.h"

namespace stylolab::stats {
namespace {

TEST(IncompleteBetaTest, ClosedForms) {
  // I_x(1, 1) = x; I_x(a, 1) = x^a; I_x(1, b) = 1 - (1 - x)^b.
  for (double x : {0.0, 0.1, 0.5, 0.93, 1.0}) {
    EXPECT_NEAR(RegularizedIncompleteBeta(1, 1, x), x, 1e-14);
    EXPECT_NEAR(RegularizedIncompleteBeta(3.5, 1, x), std::pow(x, 3.5), 1e-14);
    EXPECT_NEAR(RegularizedIncompleteBeta(1, 2.5, x),
                1 - std::pow(1 - x, 2.5), 1e-14);
  }
  EXPECT_THROW(RegularizedIncompleteBeta(0, 1, 0.5), InputError);
}

TEST(StudentPTest, KnownQuantiles) {
  // df = 1 is Cauchy: P(|T| > 1) = 1/2. df = 2: P(|T| > t) = 1 - t/sqrt(2+t^2).
  EXPECT_NEAR(StudentTwoSidedP(1.0, 1.0), 0.5, 1e-14);
  for (double t : {0.3, 1.7, 4.0}) {
    EXPECT_NEAR(StudentTwoSidedP(t, 2.0), 1 - t / std::sqrt(2 + t * t), 1e-14);
  }
  EXPECT_EQ(StudentTwoSidedP(0.0, 10.0), 1.0);
  EXPECT_EQ(StudentTwoSidedP(INFINITY, 10.0), 0.0);
}

TEST(WelchTest, IdenticalSummaries) {
  GroupSummary g{0.5, 0.2, 100};
  TTestResult r = WelchT(g, g);
  EXPECT_EQ(r.t, 0.0);
  EXPECT_EQ(r.p, 1.0);
}

TEST(WelchTest, EqualSdExample) {
  TTestResult r = WelchT({1.0, 1.0, 30}, {0.0, 1.0, 30});
  EXPECT_NEAR(r.t, std::sqrt(15.0), 1e-12);  // 1 / sqrt(2/30)
  EXPECT_NEAR(r.df, 58.0, 1e-12);
  EXPECT_NEAR(r.p, testing::QuadratureTwoSidedP(r.t, r.df), 1e-9);
  EXPECT_NEAR(r.p, 2.8e-4, 0.5e-4);
}

TEST(WelchTest, NewsSummaryIsSignificant) {
  TTestResult r = WelchT({0.60, 0.20, 4264}, {0.54, 0.20, 3768});
  EXPECT_LT(r.p, 1e-4);
}

TEST(WelchTest, ZeroVarianceConventions) {
  TTestResult same = WelchT({1, 0, 5}, {1, 0, 7});
  EXPECT_TRUE(same.degenerate);
  EXPECT_EQ(same.p, 1.0);
  TTestResult apart = WelchT({1, 0, 5}, {2, 0, 7});
  EXPECT_TRUE(apart.degenerate);
  EXPECT_EQ(apart.p, 0.0);
  EXPECT_THROW(WelchT({1, 1, 1}, {1, 1, 5}), InputError);
}

TEST(WelchTest, StudentFormUsesPooledDf) {
  TTestResult r = StudentT({1.0, 2.0, 10}, {0.0, 1.0, 20});
  EXPECT_EQ(r.df, 28.0);
  EXPECT_NEAR(r.p, testing::QuadratureTwoSidedP(r.t, r.df), 1e-8);
}

TEST(WelchTest, AgreesWithQuadratureOnRandomSamples) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t na = 2 + rng.UniformIndex(60), nb = 2 + rng.UniformIndex(60);
    const double shift = rng.UniformDouble(), scale = 0.2 + 3 * rng.UniformDouble();
    std::vector<double> a(na), b(nb);
    for (double& x : a) x = rng.Normal();
    for (double& x : b) x = shift + scale * rng.Normal();
    TTestResult r = WelchT(GroupSummary::FromSample(a), GroupSummary::FromSample(b));
    long double t, df;
    testing::ExtendedWelch(a, b, t, df);
    EXPECT_NEAR(r.t, static_cast<double>(t), 1e-10);
    EXPECT_NEAR(r.p, testing::QuadratureTwoSidedP(r.t, r.df), 1e-6);
  }
}

TEST(CohensDTest, PooledFormAndInvariances) {
  GroupSummary a{0.60, 0.20, 4264}, b{0.54, 0.20, 3768};
  EXPECT_NEAR(CohensD(a, b), 0.3, 1e-12);
  EXPECT_EQ(CohensD(a, a), 0.0);
  EXPECT_EQ(CohensD(b, a), -CohensD(a, b));
  EXPECT_THROW(CohensD({1, 0, 3}, {2, 0, 3}), DegenerateError);

  Rng rng(12);
  std::vector<double> x(40), y(25);
  for (double& v : x) v = rng.Normal();
  for (double& v : y) v = 0.4 + 1.3 * rng.Normal();
  const double d = CohensD(GroupSummary::FromSample(x), GroupSummary::FromSample(y));
  EXPECT_NEAR(d, static_cast<double>(testing::ExtendedCohensD(x, y)), 1e-12);
  auto transform = [](std::vector<double> v, double k, double c) {
    for (double& e : v) e = k * e + c;
    return v;
  };
  for (auto [k, c] : {std::pair{3.0, 0.0}, std::pair{1.0, -7.5}, std::pair{0.25, 2.0}}) {
    const double dt = CohensD(GroupSummary::FromSample(transform(x, k, c)),
                              GroupSummary::FromSample(transform(y, k, c)));
    EXPECT_NEAR(dt, d, 1e-12);
  }
}

TEST(CohensDTest, EffectBands) {
  EXPECT_EQ(EffectBand(0.1), "negligible");
  EXPECT_EQ(EffectBand(0.2), "small");
  EXPECT_EQ(EffectBand(0.5), "medium");
  EXPECT_EQ(EffectBand(0.8), "large");
}

TEST(BonferroniTest, Threshold) {
  EXPECT_NEAR(BonferroniThreshold(0.05, 117), 4.2735e-4, 0.00005e-4);
  EXPECT_EQ(BonferroniThreshold(0.05, 1), 0.05);
  EXPECT_DOUBLE_EQ(BonferroniThreshold(0.05, 5), 0.01);
  EXPECT_THROW(BonferroniThreshold(0.05, 0), InputError);
  EXPECT_THROW(BonferroniThreshold(1.5, 2), InputError);
}

TEST(PublishedTrustTest, SignedEffectsPointLeft) {
  auto rows = ParseCsv(ReadFile(STYLOLAB_FIXTURE_DIR "/published_trust.csv"));
  ASSERT_EQ(rows.size(), 15u);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& c = rows[r].cells;
    GroupSummary left{std::stod(c[1]), std::stod(c[2]), std::stoul(c[3])};
    GroupSummary right{std::stod(c[7]), std::stod(c[8]), std::stoul(c[9])};
    EXPECT_GT(CohensD(left, right), 0.0) << c[0];
    TTestResult t = WelchT(left, right);
    EXPECT_EQ(WelchT(right, left).p, t.p);
    EXPECT_EQ(WelchT(right, left).t, -t.t);
  }
}

FeatureTable Table(const std::vector<std::vector<double>>& cols, std::size_t rows,
                   Rng& rng, double shift_col0 = 0) {
  std::vector<std::string> names;
  for (std::size_t c = 0; c < cols.size(); ++c) names.push_back("f" + std::to_string(c));
  FeatureTable t(names);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> row(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      row[c] = cols[c][0] + cols[c][1] * rng.Normal() + (c == 0 ? shift_col0 : 0);
    }
    t.AddRow("r" + std::to_string(r), row);
  }
  return t;
}

TEST(CompareGroupsTest, SameRowsHaveNoSignificance) {
  Rng rng(1);
  FeatureTable a = Table({{0, 1}, {5, 2}, {1, 0.1}}, 50, rng);
  ComparisonReport r = CompareGroups(a, a);
  EXPECT_EQ(r.SignificantCount(), 0u);
  EXPECT_EQ(r.m, 3u);
}

TEST(CompareGroupsTest, PlantedShiftIsRecovered) {
  Rng rng(2);
  std::vector<std::vector<double>> spec(20, {0.0, 1.0});
  FeatureTable a = Table(spec, 200, rng);
  FeatureTable b = Table(spec, 200, rng, 5.0);
  ComparisonReport r = CompareGroups(a, b, {.alpha = 0.05});
  EXPECT_TRUE(r.rows[0].significant);
  EXPECT_EQ(r.SignificantCount(), 1u);
  EXPECT_DOUBLE_EQ(r.threshold, 0.05 / 20);
  for (const ComparisonRow& row : r.rows) {
    if (row.significant) {
      EXPECT_LT(row.test.p, 0.05 / r.m);
    }
  }
  EXPECT_EQ(r.OrderByEffect().front(), 0u);
  ComparisonReport raw = CompareGroups(a, b, {.correction = Correction::kNone});
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (r.rows[i].significant) EXPECT_TRUE(raw.rows[i].significant);
  }
  ComparisonReport preset = CompareGroups(a, b, {.comparisons = 117});
  EXPECT_DOUBLE_EQ(preset.threshold, 0.05 / 117);
}

TEST(CompareGroupsTest, SwapNegatesStatistics) {
  Rng rng(3);
  FeatureTable a = Table({{0, 1}, {1, 1}}, 30, rng);
  FeatureTable b = Table({{0.5, 2}, {1, 1}}, 45, rng);
  ComparisonReport ab = CompareGroups(a, b), ba = CompareGroups(b, a);
  for (std::size_t i = 0; i < ab.rows.size(); ++i) {
    EXPECT_EQ(ab.rows[i].test.t, -ba.rows[i].test.t);
    EXPECT_EQ(*ab.rows[i].d, -*ba.rows[i].d);
    EXPECT_EQ(ab.rows[i].test.p, ba.rows[i].test.p);
    EXPECT_EQ(ab.rows[i].significant, ba.rows[i].significant);
  }
}

TEST(CompareGroupsTest, DegenerateAndNonFiniteRows) {
  FeatureTable a({"constant", "sparse"});
  FeatureTable b({"constant", "sparse"});
  const double rows_a[][2] = {{1, NAN}, {1, 2}, {1, NAN}};
  const double rows_b[][2] = {{1, 3}, {1, 4}, {1, 5}};
  for (int i = 0; i < 3; ++i) {
    a.AddRow("a" + std::to_string(i), rows_a[i]);
    b.AddRow("b" + std::to_string(i), rows_b[i]);
  }
  ComparisonReport r = CompareGroups(a, b, {.workers = 2});
  EXPECT_TRUE(r.rows[0].degenerate);
  EXPECT_FALSE(r.rows[0].d.has_value());
  EXPECT_TRUE(r.rows[1].degenerate);
  EXPECT_EQ(r.rows[1].a.n, 1u);
  EXPECT_EQ(r.SignificantCount(), 0u);
  std::string csv = r.ToCsv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "feature,mean_a,sd_a,n_a,mean_b,sd_b,n_b,t,df,p,d,abs_d,band,"
            "significant,degenerate");
  EXPECT_NE(r.ToMarkdown().find("degenerate"), std::string::npos);
  EXPECT_THROW(CompareGroups(a, FeatureTable({"other", "sparse"})), InputError);
}

}  // namespace
}  // namespace stylolab::stats
