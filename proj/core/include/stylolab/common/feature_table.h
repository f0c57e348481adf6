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

#ifndef STYLOLAB_COMMON_FEATURE_TABLE_H_
#define STYLOLAB_COMMON_FEATURE_TABLE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stylolab {

// Row-major numeric matrix with named columns and one id per row. This is
// the on-disk shape of every per-document feature CSV.
class FeatureTable {
 public:
  FeatureTable() = default;
  explicit FeatureTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t rows() const { return ids_.size(); }
  std::size_t cols() const { return columns_.size(); }

  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols(), cols()};
  }
  double at(std::size_t r, std::size_t c) const {
    return values_[r * cols() + c];
  }
  const std::vector<double>& values() const { return values_; }

  // Throws InputError if values.size() != cols().
  void AddRow(std::string id, std::span<const double> values);

  // Index of the named column; throws InputError when absent.
  std::size_t ColumnIndex(std::string_view name) const;

  std::vector<double> Column(std::size_t c) const;

  // Keeps only rows whose index is listed, in the listed order.
  FeatureTable SelectRows(std::span<const std::size_t> rows) const;

  // Header "id,<columns...>", one line per row, shortest round-trip doubles.
  std::string ToCsv() const;
  static FeatureTable FromCsv(std::string_view text);

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> ids_;
  std::vector<double> values_;
};

}  // namespace stylolab

#endif  // STYLOLAB_COMMON_FEATURE_TABLE_H_
