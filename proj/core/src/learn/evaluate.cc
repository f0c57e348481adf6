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


#include "stylolab/learn/evaluate.h"

#include <cmath>

#include "json.hpp"
#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/parallel.h"
#include "stylolab/common/random.h"

namespace stylolab::learn {
namespace {

void Normalize(EvalReport& r) {
  const std::size_t k = r.classes.size();
  r.confusion_normalized.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t row = 0;
    for (std::size_t c : r.confusion[i]) row += c;
    for (std::size_t j = 0; j < k && row > 0; ++j) {
      r.confusion_normalized[i][j] =
          static_cast<double>(r.confusion[i][j]) / static_cast<double>(row);
    }
  }
}

}  // namespace

double SampleSd(std::span<const double> values) {
  if (values.size() < 2) return 0;
  double mean = 0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

EvalReport EvaluatePredictions(const std::vector<std::string>& classes,
                               std::span<const int> truth,
                               std::span<const int> predicted) {
  if (truth.size() != predicted.size()) {
    throw InputError("truth and prediction counts differ");
  }
  if (truth.empty()) throw InputError("cannot evaluate zero predictions");
  const std::size_t k = classes.size();
  EvalReport r;
  r.classes = classes;
  r.confusion.assign(k, std::vector<std::size_t>(k, 0));
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const auto t = static_cast<std::size_t>(truth[i]);
    const auto p = static_cast<std::size_t>(predicted[i]);
    if (t >= k || p >= k) throw InputError("label index out of range");
    ++r.confusion[t][p];
    correct += t == p;
  }
  r.accuracy = static_cast<double>(correct) / static_cast<double>(truth.size());
  r.precision.assign(k, 0.0);
  r.recall.assign(k, 0.0);
  r.f1.assign(k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t row = 0, col = 0;
    for (std::size_t j = 0; j < k; ++j) {
      row += r.confusion[c][j];
      col += r.confusion[j][c];
    }
    const double tp = static_cast<double>(r.confusion[c][c]);
    if (col > 0) r.precision[c] = tp / static_cast<double>(col);
    if (row > 0) r.recall[c] = tp / static_cast<double>(row);
    const double s = r.precision[c] + r.recall[c];
    if (s > 0) r.f1[c] = 2 * r.precision[c] * r.recall[c] / s;
    r.macro_f1 += r.f1[c];
  }
  r.macro_f1 /= static_cast<double>(k);
  r.fold_accuracy = {r.accuracy};
  r.fold_macro_f1 = {r.macro_f1};
  Normalize(r);
  return r;
}

EvalReport Evaluate(const TrainedModel& model, const Dataset& test) {
  if (test.classes != model.classes) {
    throw InputError("test classes differ from the model's classes");
  }
  const std::vector<int> predicted = model.Predict(test.x);
  EvalReport r = EvaluatePredictions(model.classes, test.y, predicted);
  r.seed = model.seed;
  return r;
}

EvalReport CrossValidate(ModelKind kind, const Dataset& data, std::size_t k,
                         const Hyperparams& params, std::uint64_t seed,
                         int workers) {
  const std::vector<Split> splits = StratifiedKFold(data, k, seed);
  std::vector<EvalReport> folds(k);
  // Folds run in parallel; trees inside a fold then run serially.
  const int inner = k >= static_cast<std::size_t>(workers) ? 1 : workers;
  ParallelFor(k, workers, [&](std::size_t f) {
    Dataset train = data.Subset(splits[f].train);
    Dataset test = data.Subset(splits[f].test);
    TrainedModel model = Train(kind, train, params, DeriveSeed(seed, f), inner);
    folds[f] = Evaluate(model, test);
  });

  const std::size_t c = data.classes.size();
  EvalReport r;
  r.classes = data.classes;
  r.folds = k;
  r.seed = seed;
  r.confusion.assign(c, std::vector<std::size_t>(c, 0));
  r.precision.assign(c, 0.0);
  r.recall.assign(c, 0.0);
  r.f1.assign(c, 0.0);
  const double inv = 1.0 / static_cast<double>(k);
  for (const EvalReport& f : folds) {
    r.fold_accuracy.push_back(f.accuracy);
    r.fold_macro_f1.push_back(f.macro_f1);
    r.accuracy += f.accuracy * inv;
    r.macro_f1 += f.macro_f1 * inv;
    for (std::size_t i = 0; i < c; ++i) {
      r.precision[i] += f.precision[i] * inv;
      r.recall[i] += f.recall[i] * inv;
      r.f1[i] += f.f1[i] * inv;
      for (std::size_t j = 0; j < c; ++j) r.confusion[i][j] += f.confusion[i][j];
    }
  }
  r.accuracy_sd = SampleSd(r.fold_accuracy);
  r.macro_f1_sd = SampleSd(r.fold_macro_f1);
  Normalize(r);
  return r;
}

std::string EvalReport::ToJson() const {
  nlohmann::json j;
  j["classes"] = classes;
  j["accuracy"] = accuracy;
  j["macro_f1"] = macro_f1;
  j["accuracy_sd"] = accuracy_sd;
  j["macro_f1_sd"] = macro_f1_sd;
  j["precision"] = precision;
  j["recall"] = recall;
  j["f1"] = f1;
  j["confusion"] = confusion;
  j["confusion_normalized"] = confusion_normalized;
  j["folds"] = folds;
  j["seed"] = seed;
  j["fold_accuracy"] = fold_accuracy;
  j["fold_macro_f1"] = fold_macro_f1;
  return j.dump(2) + "\n";
}

std::string EvalReport::ToMarkdown(const std::string& title) const {
  std::string out = title + "\n\n| Class | Precision | Recall | F1 |\n|---|---:|---:|---:|\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out += "| " + classes[c] + " | " + FormatFixed(precision[c], 3) + " | " +
           FormatFixed(recall[c], 3) + " | " + FormatFixed(f1[c], 3) + " |\n";
  }
  out += "\n| Accuracy | Macro-F1 |\n|---:|---:|\n| " + FormatFixed(accuracy, 3);
  if (folds > 1) out += " ± " + FormatFixed(accuracy_sd, 3);
  out += " | " + FormatFixed(macro_f1, 3);
  if (folds > 1) out += " ± " + FormatFixed(macro_f1_sd, 3);
  out += " |\n";
  if (folds > 1) {
    out += "\n| Fold | Accuracy | Macro-F1 |\n|---:|---:|---:|\n";
    for (std::size_t f = 0; f < fold_accuracy.size(); ++f) {
      out += "| " + std::to_string(f + 1) + " | " +
             FormatFixed(fold_accuracy[f], 3) + " | " +
             FormatFixed(fold_macro_f1[f], 3) + " |\n";
    }
  }
  return out;
}

std::string EvalReport::ConfusionCsv() const {
  CsvWriter w;
  std::vector<std::string> header = {"true"};
  header.insert(header.end(), classes.begin(), classes.end());
  w.AddRow(header);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<std::string> row = {classes[i]};
    for (std::size_t c : confusion[i]) row.push_back(std::to_string(c));
    w.AddRow(row);
  }
  return w.str();
}

}  // namespace stylolab::learn
