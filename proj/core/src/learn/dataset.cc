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


#include "stylolab/learn/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/random.h"

namespace stylolab::learn {
namespace {

bool ParseNumber(std::string_view s, double& out) {
  s = TrimAscii(s);
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::string_view ToString(FeatureFamily f) {
  switch (f) {
    case FeatureFamily::kLgs: return "lgs";
    case FeatureFamily::kEmbedding: return "embedding";
    case FeatureFamily::kOther: return "other";
  }
  return "other";
}

std::vector<std::size_t> Dataset::ClassCounts() const {
  std::vector<std::size_t> counts(classes.size(), 0);
  for (int c : y) ++counts[static_cast<std::size_t>(c)];
  return counts;
}

Dataset Dataset::Subset(std::span<const std::size_t> rows) const {
  Dataset out;
  out.x = x.SelectRows(rows);
  out.y.reserve(rows.size());
  for (std::size_t r : rows) out.y.push_back(y[r]);
  out.classes = classes;
  out.family = family;
  return out;
}

void Dataset::Validate() const {
  if (y.size() != x.rows()) {
    throw InputError("dataset has " + std::to_string(x.rows()) +
                     " rows but " + std::to_string(y.size()) + " labels");
  }
  for (int c : y) {
    if (c < 0 || static_cast<std::size_t>(c) >= classes.size()) {
      throw InputError("label index out of range");
    }
  }
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (double v : x.row(r)) {
      if (!std::isfinite(v)) {
        throw InputError("non-finite feature value in row '" + x.ids()[r] +
                         "'");
      }
    }
  }
}

Dataset MakeDataset(FeatureTable x, std::span<const std::string> labels,
                    FeatureFamily family) {
  if (labels.size() != x.rows()) {
    throw InputError("label count does not match the feature rows");
  }
  std::set<std::string> distinct(labels.begin(), labels.end());
  Dataset out;
  out.classes.assign(distinct.begin(), distinct.end());
  for (const std::string& l : labels) {
    out.y.push_back(static_cast<int>(
        std::lower_bound(out.classes.begin(), out.classes.end(), l) -
        out.classes.begin()));
  }
  out.x = std::move(x);
  out.family = family;
  out.Validate();
  return out;
}

Dataset BalanceClasses(const Dataset& data, std::size_t n_per_class,
                       std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> by_class(data.classes.size());
  for (std::size_t r = 0; r < data.rows(); ++r) {
    by_class[static_cast<std::size_t>(data.y[r])].push_back(r);
  }
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (by_class[c].size() < n_per_class) {
      throw InputError("class '" + data.classes[c] + "' has " +
                       std::to_string(by_class[c].size()) +
                       " rows, fewer than the requested " +
                       std::to_string(n_per_class));
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    Rng rng(DeriveSeed(seed, c));
    rng.Shuffle(std::span<std::size_t>(by_class[c]));
    keep.insert(keep.end(), by_class[c].begin(),
                by_class[c].begin() + static_cast<std::ptrdiff_t>(n_per_class));
  }
  std::sort(keep.begin(), keep.end());
  return data.Subset(keep);
}

std::vector<Split> StratifiedKFold(const Dataset& data, std::size_t k,
                                   std::uint64_t seed) {
  if (k < 2) throw InputError("cross-validation needs at least 2 folds");
  std::vector<std::vector<std::size_t>> by_class(data.classes.size());
  for (std::size_t r = 0; r < data.rows(); ++r) {
    by_class[static_cast<std::size_t>(data.y[r])].push_back(r);
  }
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (!by_class[c].empty() && by_class[c].size() < k) {
      throw InputError("class '" + data.classes[c] + "' has " +
                       std::to_string(by_class[c].size()) +
                       " rows, fewer than " + std::to_string(k) + " folds");
    }
  }
  std::vector<std::size_t> fold_of(data.rows());
  std::size_t next = 0;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    Rng rng(DeriveSeed(seed, c));
    rng.Shuffle(std::span<std::size_t>(by_class[c]));
    for (std::size_t r : by_class[c]) {
      fold_of[r] = next;
      next = (next + 1) % k;
    }
  }
  std::vector<Split> splits(k);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t f = 0; f < k; ++f) {
      (fold_of[r] == f ? splits[f].test : splits[f].train).push_back(r);
    }
  }
  return splits;
}

Standardizer Standardizer::Fit(const FeatureTable& x) {
  Standardizer s;
  const std::size_t n = x.rows(), p = x.cols();
  s.mean.assign(p, 0.0);
  s.scale.assign(p, 1.0);
  if (n == 0) return s;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < p; ++c) s.mean[c] += x.at(r, c);
  }
  for (double& m : s.mean) m /= static_cast<double>(n);
  std::vector<double> ss(p, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      const double d = x.at(r, c) - s.mean[c];
      ss[c] += d * d;
    }
  }
  for (std::size_t c = 0; c < p; ++c) {
    const double sd = std::sqrt(ss[c] / static_cast<double>(n));
    s.scale[c] = sd > 0 ? sd : 1.0;
  }
  return s;
}

std::vector<double> Standardizer::Apply(const FeatureTable& x) const {
  if (x.cols() != mean.size()) {
    throw InputError("standardizer expects " + std::to_string(mean.size()) +
                     " columns, got " + std::to_string(x.cols()));
  }
  std::vector<double> out(x.values().size());
  const std::size_t p = x.cols();
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      const double v = (x.at(r, c) - mean[c]) / scale[c];
      if (!std::isfinite(v)) {
        throw InputError("non-finite standardized value in row '" +
                         x.ids()[r] + "'");
      }
      out[r * p + c] = v;
    }
  }
  return out;
}

FeatureTable ParseEmbeddings(std::string_view csv,
                             const corpus::DocumentSet& docs) {
  std::vector<CsvRow> rows = ParseCsv(csv);
  if (rows.empty()) throw InputError("embedding file is empty");
  std::size_t first = 0;
  std::vector<std::string> columns;
  double probe = 0;
  if (rows[0].cells.size() >= 2 && !ParseNumber(rows[0].cells[1], probe)) {
    columns.assign(rows[0].cells.begin() + 1, rows[0].cells.end());
    first = 1;
  } else {
    for (std::size_t c = 1; c < rows[0].cells.size(); ++c) {
      columns.push_back("emb_" + std::to_string(c - 1));
    }
  }
  if (columns.empty()) throw InputError("embedding rows need at least one value");
  FeatureTable table(columns);
  std::vector<double> values(columns.size());
  std::vector<std::string> unknown;
  for (std::size_t i = first; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    if (row.cells.size() != columns.size() + 1) {
      throw ParseError("embedding row '" + row.cells[0] + "' has " +
                           std::to_string(row.cells.size() - 1) +
                           " values, expected " +
                           std::to_string(columns.size()),
                       row.line);
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!ParseNumber(row.cells[c + 1], values[c]) ||
          !std::isfinite(values[c])) {
        throw ParseError("not a finite number: '" + row.cells[c + 1] + "'",
                         row.line);
      }
    }
    if (!docs.Find(row.cells[0])) unknown.push_back(row.cells[0]);
    table.AddRow(row.cells[0], values);
  }
  if (!unknown.empty()) {
    std::string list;
    for (const std::string& id : unknown) list += (list.empty() ? "" : ", ") + id;
    throw InputError("embedding ids not in the corpus: " + list);
  }
  return table;
}

FeatureTable LoadEmbeddings(const std::filesystem::path& path,
                            const corpus::DocumentSet& docs) {
  return ParseEmbeddings(ReadFile(path), docs);
}

}  // namespace stylolab::learn
