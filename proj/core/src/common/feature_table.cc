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

#include "stylolab/common/feature_table.h"

#include <charconv>
#include <cmath>

#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"

namespace stylolab {

FeatureTable::FeatureTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

void FeatureTable::AddRow(std::string id, std::span<const double> values) {
  if (values.size() != cols()) {
    throw InputError("row '" + id + "' has " + std::to_string(values.size()) +
                     " values, expected " + std::to_string(cols()));
  }
  ids_.push_back(std::move(id));
  values_.insert(values_.end(), values.begin(), values.end());
}

std::size_t FeatureTable::ColumnIndex(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw InputError("no feature column named '" + std::string(name) + "'");
}

std::vector<double> FeatureTable::Column(std::size_t c) const {
  std::vector<double> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
  return out;
}

FeatureTable FeatureTable::SelectRows(std::span<const std::size_t> rows) const {
  FeatureTable out(columns_);
  out.ids_.reserve(rows.size());
  out.values_.reserve(rows.size() * cols());
  for (std::size_t r : rows) out.AddRow(ids_.at(r), row(r));
  return out;
}

std::string FeatureTable::ToCsv() const {
  CsvWriter w;
  std::vector<std::string> cells;
  cells.reserve(cols() + 1);
  cells.push_back("id");
  cells.insert(cells.end(), columns_.begin(), columns_.end());
  w.AddRow(cells);
  for (std::size_t r = 0; r < rows(); ++r) {
    cells.clear();
    cells.push_back(ids_[r]);
    for (double v : row(r)) cells.push_back(FormatDouble(v));
    w.AddRow(cells);
  }
  return w.str();
}

FeatureTable FeatureTable::FromCsv(std::string_view text) {
  std::vector<CsvRow> rows = ParseCsv(text);
  if (rows.empty()) throw ParseError("feature CSV has no header", 0);
  const CsvRow& header = rows.front();
  if (header.cells.empty() || header.cells[0] != "id") {
    throw ParseError("feature CSV header must start with 'id'", header.line);
  }
  FeatureTable table(
      std::vector<std::string>(header.cells.begin() + 1, header.cells.end()));
  std::vector<double> values(table.cols());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    if (row.cells.size() != table.cols() + 1) {
      throw ParseError("expected " + std::to_string(table.cols() + 1) +
                           " cells, found " + std::to_string(row.cells.size()),
                       row.line);
    }
    for (std::size_t c = 0; c < table.cols(); ++c) {
      const std::string& s = row.cells[c + 1];
      double v = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParseError("not a number: '" + s + "'", row.line);
      }
      values[c] = v;
    }
    table.AddRow(row.cells[0], values);
  }
  return table;
}

}  // namespace stylolab
