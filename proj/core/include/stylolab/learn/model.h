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


// Logistic regression, linear SVM and random forest classifiers.

#ifndef STYLOLAB_LEARN_MODEL_H_
#define STYLOLAB_LEARN_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylolab/learn/dataset.h"

namespace stylolab::learn {

enum class ModelKind { kLogReg, kLinSvm, kForest };

std::string_view ToString(ModelKind k);
std::optional<ModelKind> ParseModelKind(std::string_view s);

struct LogRegParams {
  double l2 = 1e-2;
  double tolerance = 1e-6;  // on the gradient norm
  int max_iterations = 5000;

  friend bool operator==(const LogRegParams&, const LogRegParams&) = default;
};

struct SvmParams {
  double lambda = 1e-3;
  int epochs = 30;

  friend bool operator==(const SvmParams&, const SvmParams&) = default;
};

struct ForestParams {
  int trees = 100;
  int max_depth = 0;  // 0 means unlimited
  std::size_t min_samples_split = 2;
  std::size_t max_features = 0;  // 0 means floor(sqrt(feature count))
  bool bootstrap = true;

  // Depth 3, 8 trees: for labeled sets of a few dozen rows.
  static ForestParams SmallSample();

  friend bool operator==(const ForestParams&, const ForestParams&) = default;
};

struct Hyperparams {
  LogRegParams logreg;
  SvmParams svm;
  ForestParams forest;

  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

struct TreeNode {
  int feature = -1;  // -1 for leaves
  double threshold = 0;  // go left when value <= threshold
  int left = -1;
  int right = -1;
  std::vector<double> distribution;  // leaves: class fractions

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  friend bool operator==(const Tree&, const Tree&) = default;
};

class TrainedModel {
 public:
  static constexpr int kFormatVersion = 1;

  ModelKind kind = ModelKind::kLogReg;
  std::vector<std::string> features;
  std::vector<std::string> classes;
  std::uint64_t seed = 0;
  Hyperparams params;
  Standardizer standardizer;  // empty for forests, which see raw values
  // Linear models: classes x (features + 1), bias last.
  std::vector<double> weights;
  std::vector<Tree> trees;
  std::vector<double> importance;  // forests: normalized impurity decrease

  // Per-row class scores: probabilities for logreg and rforest, decision
  // values for linsvm. Throws InputError unless the columns equal
  // `features` in order.
  std::vector<std::vector<double>> PredictProba(const FeatureTable& x) const;
  // Highest-scoring class index; ties go to the lower index.
  std::vector<int> Predict(const FeatureTable& x) const;

  std::string ToJson() const;
  static TrainedModel FromJson(std::string_view json);

  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;
};

// Throws DegenerateError when fewer than two classes have rows. Linear
// models z-score features with statistics of `data`; forests use raw values.
TrainedModel Train(ModelKind kind, const Dataset& data,
                   const Hyperparams& params, std::uint64_t seed,
                   int workers = 1);

// Mean cross-entropy plus (l2 / 2) * |W|^2 over non-bias weights for the
// multinomial model on row-major `x` (n x p). `w` is classes x (p + 1).
// Fills `grad` (same shape as w) when non-null.
double SoftmaxLoss(std::span<const double> x, std::size_t p,
                   std::span<const int> y, std::size_t classes,
                   std::span<const double> w, double l2,
                   std::vector<double>* grad);

// Features by descending importance; ties keep column order. Throws
// InputError for non-forest models.
std::vector<std::pair<std::string, double>> FeatureImportance(
    const TrainedModel& model);

}  // namespace stylolab::learn

#endif  // STYLOLAB_LEARN_MODEL_H_
