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


#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "stylolab/common/error.h"
#include "stylolab/common/random.h"
#include "stylolab/learn/dataset.h"
#include "stylolab/learn/evaluate.h"
#include "stylolab/learn/model.h"

namespace stylolab::learn {
namespace {

std::vector<std::string> Columns(std::size_t p) {
  std::vector<std::string> c;
  for (std::size_t j = 0; j < p; ++j) c.push_back("f" + std::to_string(j));
  return c;
}

// Rows of `p` noise features; labels cycle through `sizes`. When `signal`
// is set, feature 0 is the class index plus small noise.
Dataset Synthetic(const std::vector<std::size_t>& sizes, std::size_t p,
                  std::uint64_t seed, bool signal) {
  Rng rng(seed);
  FeatureTable x(Columns(p));
  std::vector<std::string> labels;
  std::vector<double> row(p);
  std::size_t id = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    for (std::size_t i = 0; i < sizes[c]; ++i) {
      for (double& v : row) v = rng.Normal();
      if (signal) row[0] = static_cast<double>(c) + 0.1 * rng.Normal();
      x.AddRow("r" + std::to_string(id++), row);
      labels.push_back("c" + std::to_string(c));
    }
  }
  return MakeDataset(std::move(x), labels, FeatureFamily::kOther);
}

Dataset FromRows(const std::vector<std::vector<double>>& rows,
                 const std::vector<std::string>& labels) {
  FeatureTable x(Columns(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    x.AddRow("r" + std::to_string(i), rows[i]);
  }
  return MakeDataset(std::move(x), labels, FeatureFamily::kOther);
}

double TrainingAccuracy(const TrainedModel& m, const Dataset& d) {
  return Evaluate(m, d).accuracy;
}

TEST(BalanceTest, ExactCountsAndDeterminism) {
  Dataset d = Synthetic({30, 20, 25}, 3, 1, false);
  Dataset b = BalanceClasses(d, 20, 5);
  EXPECT_EQ(b.rows(), 60u);
  EXPECT_EQ(b.ClassCounts(), (std::vector<std::size_t>{20, 20, 20}));
  EXPECT_EQ(BalanceClasses(d, 20, 5).x.ids(), b.x.ids());
  EXPECT_NE(BalanceClasses(d, 20, 6).x.ids(), b.x.ids());
  std::set<std::string> unique(b.x.ids().begin(), b.x.ids().end());
  EXPECT_EQ(unique.size(), 60u);
  try {
    BalanceClasses(d, 21, 5);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("'c1'"), std::string::npos);
  }
}

TEST(KFoldTest, BalancedFolds) {
  Dataset d = Synthetic({50, 50}, 2, 2, false);
  auto a = StratifiedKFold(d, 5, 1);
  auto b = StratifiedKFold(d, 5, 2);
  for (std::size_t f = 0; f < 5; ++f) {
    EXPECT_EQ(d.Subset(a[f].test).ClassCounts(), (std::vector<std::size_t>{10, 10}));
    EXPECT_EQ(d.Subset(b[f].test).ClassCounts(), (std::vector<std::size_t>{10, 10}));
  }
  EXPECT_NE(a[0].test, b[0].test);
}

TEST(KFoldTest, PartitionAndProportionProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 2 + rng.UniformIndex(9);
    std::vector<std::size_t> sizes;
    for (std::size_t c = 0, n = 2 + rng.UniformIndex(3); c < n; ++c) {
      sizes.push_back(k + rng.UniformIndex(40));
    }
    Dataset d = Synthetic(sizes, 1, trial, false);
    auto splits = StratifiedKFold(d, k, trial);
    std::vector<int> seen(d.rows(), 0);
    for (const Split& s : splits) {
      for (std::size_t r : s.test) ++seen[r];
      EXPECT_EQ(s.train.size() + s.test.size(), d.rows());
      std::vector<std::size_t> counts = d.Subset(s.test).ClassCounts();
      for (std::size_t c = 0; c < sizes.size(); ++c) {
        const double expect = static_cast<double>(sizes[c]) / static_cast<double>(k);
        EXPECT_LE(std::fabs(static_cast<double>(counts[c]) - expect), 1.0);
      }
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
  EXPECT_THROW(StratifiedKFold(Synthetic({3, 10}, 1, 0, false), 4, 0), InputError);
}

TEST(LogRegTest, GradientMatchesFiniteDifferences) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng.UniformIndex(8), p = 1 + rng.UniformIndex(4),
                      k = 2 + rng.UniformIndex(3);
    std::vector<double> x(n * p), w(k * (p + 1));
    std::vector<int> y(n);
    for (double& v : x) v = rng.Normal();
    for (double& v : w) v = rng.Normal();
    for (int& v : y) v = static_cast<int>(rng.UniformIndex(k));
    std::vector<double> grad;
    SoftmaxLoss(x, p, y, k, w, 0.1, &grad);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double h = 1e-6;
      std::vector<double> up = w, down = w;
      up[i] += h;
      down[i] -= h;
      const double fd = (SoftmaxLoss(x, p, y, k, up, 0.1, nullptr) -
                         SoftmaxLoss(x, p, y, k, down, 0.1, nullptr)) /
                        (2 * h);
      EXPECT_LE(std::fabs(fd - grad[i]), 1e-5 * std::max(1.0, std::fabs(fd)))
          << "trial " << trial << " weight " << i;
    }
  }
}

TEST(LogRegTest, SeparablePoints) {
  Dataset d = FromRows({{0, 0}, {0.2, 0.1}, {3, 3}, {3.1, 2.9}}, {"a", "a", "b", "b"});
  EXPECT_EQ(TrainingAccuracy(Train(ModelKind::kLogReg, d, {}, 1), d), 1.0);
  EXPECT_EQ(TrainingAccuracy(Train(ModelKind::kLinSvm, d, {}, 1), d), 1.0);
}

// Best agreement with the XOR labels over every labeling of the four corners
// that some line realizes. Lines are enumerated by direction; thresholds sit
// between consecutive projections.
double BestLinearXorAgreement() {
  const double pts[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  const int xor_labels[4] = {0, 1, 1, 0};
  std::set<int> realizable;
  for (int a = 0; a < 3600; ++a) {
    const double th = a * M_PI / 1800.0;
    double proj[4];
    for (int i = 0; i < 4; ++i) proj[i] = std::cos(th) * pts[i][0] + std::sin(th) * pts[i][1];
    std::vector<double> cuts = {-10, 10};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) cuts.push_back((proj[i] + proj[j]) / 2 + 1e-9);
    }
    for (double c : cuts) {
      int mask = 0;
      for (int i = 0; i < 4; ++i) mask |= (proj[i] > c) << i;
      realizable.insert(mask);
    }
  }
  EXPECT_EQ(realizable.size(), 14u);  // all but the two XOR labelings
  int best = 0;
  for (int mask : realizable) {
    int agree = 0;
    for (int i = 0; i < 4; ++i) agree += ((mask >> i) & 1) == xor_labels[i];
    best = std::max(best, agree);
  }
  return best / 4.0;
}

TEST(ForestTest, XorNeedsDepthTwo) {
  Dataset d = FromRows({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {"a", "b", "b", "a"});
  Hyperparams hp;
  hp.forest.max_depth = 2;
  EXPECT_EQ(TrainingAccuracy(Train(ModelKind::kForest, d, hp, 4), d), 1.0);
  const double bound = BestLinearXorAgreement();
  EXPECT_EQ(bound, 0.75);
  EXPECT_LE(TrainingAccuracy(Train(ModelKind::kLogReg, d, hp, 4), d), bound);
  EXPECT_LE(TrainingAccuracy(Train(ModelKind::kLinSvm, d, hp, 4), d), bound);
}

TEST(ModelTest, DeterministicAndRoundTrips) {
  Dataset d = Synthetic({40, 40, 40}, 6, 7, true);
  for (ModelKind kind : {ModelKind::kLogReg, ModelKind::kLinSvm, ModelKind::kForest}) {
    TrainedModel a = Train(kind, d, {}, 42, 1);
    TrainedModel b = Train(kind, d, {}, 42, 3);
    EXPECT_EQ(a.ToJson(), b.ToJson()) << ToString(kind);
    TrainedModel c = TrainedModel::FromJson(a.ToJson());
    EXPECT_TRUE(c == a) << ToString(kind);
    EXPECT_EQ(c.Predict(d.x), a.Predict(d.x));
    EXPECT_GT(TrainingAccuracy(a, d), 0.9) << ToString(kind);
  }
  EXPECT_NE(Train(ModelKind::kForest, d, {}, 1).ToJson(),
            Train(ModelKind::kForest, d, {}, 2).ToJson());
}

TEST(ModelTest, Errors) {
  Dataset one = Synthetic({5}, 2, 1, false);
  EXPECT_THROW(Train(ModelKind::kLogReg, one, {}, 1), DegenerateError);
  Dataset d = Synthetic({5, 5}, 2, 1, false);
  TrainedModel m = Train(ModelKind::kLogReg, d, {}, 1);
  Dataset other = Synthetic({5, 5}, 3, 1, false);
  EXPECT_THROW(m.Predict(other.x), InputError);
  EXPECT_THROW(FeatureImportance(m), InputError);
  EXPECT_THROW(TrainedModel::FromJson("{\"format_version\": 9}"), InputError);
}

// The model keeps training statistics; predicting a row never depends on
// other rows in the batch, even extreme canaries.
TEST(ModelTest, NoStandardizationLeakage) {
  Dataset d = Synthetic({30, 30}, 3, 9, true);
  auto splits = StratifiedKFold(d, 3, 1);
  Dataset train = d.Subset(splits[0].train);
  TrainedModel m = Train(ModelKind::kLogReg, train, {}, 1);
  EXPECT_EQ(m.standardizer, Standardizer::Fit(train.x));

  FeatureTable test(d.x.columns());
  FeatureTable alone(d.x.columns());
  const std::vector<double> canary = {1e6, -1e6, 1e6};
  test.AddRow("canary", canary);
  std::vector<double> row(d.x.row(splits[0].test[0]).begin(), d.x.row(splits[0].test[0]).end());
  test.AddRow("probe", row);
  alone.AddRow("probe", row);
  EXPECT_EQ(m.PredictProba(test)[1], m.PredictProba(alone)[0]);
}

TEST(ForestTest, MonotoneRescalingKeepsPredictions) {
  Dataset d = Synthetic({30, 30}, 4, 12, true);
  Dataset warped = d;
  FeatureTable x(d.x.columns());
  for (std::size_t r = 0; r < d.rows(); ++r) {
    std::vector<double> row(d.x.row(r).begin(), d.x.row(r).end());
    row[0] = std::exp(row[0]);
    row[2] = 3 * row[2] - 7;
    x.AddRow(d.x.ids()[r], row);
  }
  warped.x = x;
  EXPECT_EQ(Train(ModelKind::kForest, d, {}, 5).Predict(d.x),
            Train(ModelKind::kForest, warped, {}, 5).Predict(warped.x));
}

TEST(ImportanceTest, PlantedFeatureRanksFirst) {
  Dataset d = Synthetic({100, 100}, 10, 13, true);
  TrainedModel m = Train(ModelKind::kForest, d, {}, 1);
  auto ranked = FeatureImportance(m);
  EXPECT_EQ(ranked[0].first, "f0");
  double sum = 0;
  for (const auto& [name, v] : ranked) sum += v;
  EXPECT_NEAR(sum, 1.0, 1e-9);
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1].second, ranked[i].second);
  }
}

TEST(ImportanceTest, NoiseIsNearUniform) {
  Dataset d = Synthetic({200, 200}, 50, 14, false);
  auto ranked = FeatureImportance(Train(ModelKind::kForest, d, {}, 1));
  EXPECT_LT(ranked.front().second / ranked.back().second, 5.0);
}

TEST(EvaluateTest, HandComputedConfusion) {
  std::vector<int> truth, pred;
  auto add = [&](int t, int p, int n) {
    for (int i = 0; i < n; ++i) {
      truth.push_back(t);
      pred.push_back(p);
    }
  };
  add(0, 0, 9);
  add(0, 1, 1);
  add(1, 0, 2);
  add(1, 1, 8);
  EvalReport r = EvaluatePredictions({"x", "y"}, truth, pred);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.85);
  // F1 = 2PR/(P+R): class x 6/7, class y 16/19; mean 113/133.
  EXPECT_NEAR(r.macro_f1, 113.0 / 133.0, 1e-15);
  EXPECT_NEAR(r.f1[0], 6.0 / 7.0, 1e-15);
  EXPECT_EQ(r.confusion, (std::vector<std::vector<std::size_t>>{{9, 1}, {2, 8}}));
  EXPECT_DOUBLE_EQ(r.confusion_normalized[1][0], 0.2);
  EXPECT_EQ(r.ConfusionCsv(), "true,x,y\nx,9,1\ny,2,8\n");
}

TEST(EvaluateTest, PerfectAndConstant) {
  std::vector<int> truth = {0, 1, 2, 0, 1, 2};
  EvalReport perfect = EvaluatePredictions({"a", "b", "c"}, truth, truth);
  EXPECT_EQ(perfect.accuracy, 1.0);
  EXPECT_EQ(perfect.macro_f1, 1.0);
  std::vector<int> zeros(6, 0);
  EvalReport constant = EvaluatePredictions({"a", "b", "c"}, truth, zeros);
  EXPECT_DOUBLE_EQ(constant.accuracy, 1.0 / 3.0);
  EXPECT_EQ(constant.precision[1], 0.0);
}

TEST(CrossValidateTest, CoversEveryRowOnceAndIsDeterministic) {
  Dataset d = Synthetic({30, 30, 30}, 5, 15, true);
  for (ModelKind kind : {ModelKind::kLogReg, ModelKind::kLinSvm, ModelKind::kForest}) {
    EvalReport a = CrossValidate(kind, d, 5, {}, 3, 1);
    EvalReport b = CrossValidate(kind, d, 5, {}, 3, 4);
    EXPECT_EQ(a.ToJson(), b.ToJson());
    std::size_t total = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      std::size_t row = 0;
      for (std::size_t c : a.confusion[i]) row += c;
      EXPECT_EQ(row, 30u);
      total += row;
    }
    EXPECT_EQ(total, d.rows());
    EXPECT_EQ(a.fold_accuracy.size(), 5u);
    EXPECT_NEAR(a.accuracy_sd, SampleSd(a.fold_accuracy), 0);
  }
}

TEST(CrossValidateTest, SmallSamplePresetReportsDispersion) {
  Dataset d = Synthetic({25, 25}, 20, 16, true);
  Hyperparams hp;
  hp.forest = ForestParams::SmallSample();
  EvalReport r = CrossValidate(ModelKind::kForest, d, 2, hp, 8);
  EXPECT_EQ(r.folds, 2u);
  EXPECT_EQ(r.fold_macro_f1.size(), 2u);
  EXPECT_NE(r.ToMarkdown("t").find("| Fold |"), std::string::npos);
  EXPECT_EQ(CrossValidate(ModelKind::kForest, d, 2, hp, 8).ToJson(), r.ToJson());
}

TEST(EmbeddingsTest, ParseAndValidate) {
  std::vector<corpus::Document> docs(3);
  for (int i = 0; i < 3; ++i) {
    docs[i].id = "d" + std::to_string(i);
    docs[i].text = "x";
  }
  corpus::DocumentSet set(docs);
  FeatureTable t = ParseEmbeddings("d0,1,2,3,4\nd1,0,0,0,0\nd2,1.5,2,3,-4\n", set);
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t.cols(), 4u);
  EXPECT_EQ(t.columns()[3], "emb_3");
  FeatureTable h = ParseEmbeddings("id,a,b\nd0,1,2\n", set);
  EXPECT_EQ(h.columns(), (std::vector<std::string>{"a", "b"}));
  try {
    ParseEmbeddings("d0,1,2\nd1,1\n", set);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'d1'"), std::string::npos);
  }
  try {
    ParseEmbeddings("d0,1\nzz,1\nyy,2\n", set);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("zz, yy"), std::string::npos);
  }
}

}  // namespace
}  // namespace stylolab::learn
