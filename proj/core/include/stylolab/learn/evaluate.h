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


// Classification metrics and k-fold cross-validation.

#ifndef STYLOLAB_LEARN_EVALUATE_H_
#define STYLOLAB_LEARN_EVALUATE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stylolab/learn/dataset.h"
#include "stylolab/learn/model.h"

namespace stylolab::learn {

struct EvalReport {
  std::vector<std::string> classes;
  double accuracy = 0;
  double macro_f1 = 0;
  std::vector<double> precision;  // per class; 0 when nothing was predicted
  std::vector<double> recall;     // per class; 0 when the class is absent
  std::vector<double> f1;
  // Rows are true classes, columns predicted classes.
  std::vector<std::vector<std::size_t>> confusion;
  std::vector<std::vector<double>> confusion_normalized;  // rows sum to 1
  std::size_t folds = 1;
  std::uint64_t seed = 0;
  // One entry per fold; single evaluations have one entry.
  std::vector<double> fold_accuracy;
  std::vector<double> fold_macro_f1;
  double accuracy_sd = 0;  // sample SD across folds, 0 for one fold
  double macro_f1_sd = 0;

  std::string ToJson() const;
  // Per-class precision/recall/F1 plus accuracy and macro-F1, then folds.
  std::string ToMarkdown(const std::string& title) const;
  // Counts with a header of predicted classes and the true class first.
  std::string ConfusionCsv() const;
};

// Metrics from label indices in [0, classes.size()).
EvalReport EvaluatePredictions(const std::vector<std::string>& classes,
                               std::span<const int> truth,
                               std::span<const int> predicted);

// Throws InputError when the dataset's classes differ from the model's.
EvalReport Evaluate(const TrainedModel& model, const Dataset& test);

// Trains on k-1 folds with seed DeriveSeed(seed, fold) and tests on the
// remaining fold. Accuracy, macro-F1 and per-class metrics are unweighted
// means over folds; confusion counts are summed before normalizing.
EvalReport CrossValidate(ModelKind kind, const Dataset& data, std::size_t k,
                         const Hyperparams& params, std::uint64_t seed,
                         int workers = 1);

// Sample standard deviation (n - 1); 0 for fewer than two values.
double SampleSd(std::span<const double> values);

}  // namespace stylolab::learn

#endif  // STYLOLAB_LEARN_EVALUATE_H_
