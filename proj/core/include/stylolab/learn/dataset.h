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


// Labeled feature matrices, class balancing, stratified folds and
// standardization.

#ifndef STYLOLAB_LEARN_DATASET_H_
#define STYLOLAB_LEARN_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stylolab/common/feature_table.h"
#include "stylolab/corpus/corpus.h"

namespace stylolab::learn {

enum class FeatureFamily { kLgs, kEmbedding, kOther };

std::string_view ToString(FeatureFamily f);

struct Dataset {
  FeatureTable x;                    // row ids are document ids
  std::vector<int> y;                // indices into classes
  std::vector<std::string> classes;  // class names, ascending
  FeatureFamily family = FeatureFamily::kOther;

  std::size_t rows() const { return x.rows(); }
  std::size_t cols() const { return x.cols(); }
  std::vector<std::size_t> ClassCounts() const;

  // Keeps the listed rows in the listed order; classes are unchanged.
  Dataset Subset(std::span<const std::size_t> rows) const;

  // Throws InputError on size mismatches, labels out of range, or
  // non-finite values.
  void Validate() const;
};

// Class list is the sorted set of distinct labels.
Dataset MakeDataset(FeatureTable x, std::span<const std::string> labels,
                    FeatureFamily family);

// Exactly n_per_class rows per class, drawn without replacement, in
// ascending original row order. Throws InputError naming the first class
// with fewer rows.
Dataset BalanceClasses(const Dataset& data, std::size_t n_per_class,
                       std::uint64_t seed);

struct Split {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

// Rows of each class are shuffled and dealt round-robin to the folds,
// continuing where the previous class stopped so fold sizes differ by at
// most one. Throws InputError when k < 2 or a class has fewer than k rows.
std::vector<Split> StratifiedKFold(const Dataset& data, std::size_t k,
                                   std::uint64_t seed);

// Per-column z-scoring. Constant columns get scale 1 so they map to 0.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;

  static Standardizer Fit(const FeatureTable& x);
  // Row-major standardized copy. Throws InputError on a column mismatch or a
  // non-finite result.
  std::vector<double> Apply(const FeatureTable& x) const;

  friend bool operator==(const Standardizer&, const Standardizer&) = default;
};

// CSV whose first column is a document id and whose other columns are
// floats. A header row is recognized when its second cell is not a number;
// otherwise columns are named emb_0, emb_1, ... Throws ParseError naming
// the row on inconsistent lengths, and InputError listing ids that are not
// in `docs`.
FeatureTable ParseEmbeddings(std::string_view csv,
                             const corpus::DocumentSet& docs);
FeatureTable LoadEmbeddings(const std::filesystem::path& path,
                            const corpus::DocumentSet& docs);

}  // namespace stylolab::learn

#endif  // STYLOLAB_LEARN_DATASET_H_
