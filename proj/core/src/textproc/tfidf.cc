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

#include "stylolab/textproc/tfidf.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "stylolab/common/error.h"

namespace stylolab::textproc {
namespace {

bool IsTerm(const Token& t, const TfidfOptions& options) {
  return t.kind != TokenKind::kPunctuation && !options.stopwords.contains(t.norm);
}

}  // namespace

double SparseVector::Norm() const {
  double s = 0;
  for (const auto& [id, w] : entries) s += w * w;
  return std::sqrt(s);
}

std::int64_t Vocabulary::IdOf(std::string_view term) const {
  auto it = index_.find(std::string(term));
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Vocabulary TfidfFit(std::span<const TokenStream> corpus, TfidfOptions options) {
  if (corpus.empty()) throw InputError("TF-IDF fit on an empty corpus");
  std::map<std::string, std::size_t> df;
  std::vector<const std::string*> seen;
  for (const TokenStream& doc : corpus) {
    seen.clear();
    for (const Token& t : doc.tokens) {
      if (IsTerm(t, options)) seen.push_back(&t.norm);
    }
    std::sort(seen.begin(), seen.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    seen.erase(std::unique(seen.begin(), seen.end(),
                           [](const std::string* a, const std::string* b) {
                             return *a == *b;
                           }),
               seen.end());
    for (const std::string* term : seen) ++df[*term];
  }

  Vocabulary vocab;
  vocab.document_count_ = corpus.size();
  const double n = static_cast<double>(corpus.size());
  vocab.terms_.reserve(df.size());
  vocab.idf_.reserve(df.size());
  for (const auto& [term, count] : df) {
    vocab.index_.emplace(term, static_cast<std::uint32_t>(vocab.terms_.size()));
    vocab.terms_.push_back(term);
    vocab.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) +
                         1.0);
  }
  vocab.options_ = std::move(options);
  return vocab;
}

SparseVector TfidfVector(const TokenStream& doc, const Vocabulary& vocab) {
  SparseVector v;
  v.dimension = vocab.size();
  std::vector<std::uint32_t> ids;
  ids.reserve(doc.tokens.size());
  for (const Token& t : doc.tokens) {
    if (!IsTerm(t, vocab.options())) continue;
    std::int64_t id = vocab.IdOf(t.norm);
    if (id >= 0) ids.push_back(static_cast<std::uint32_t>(id));
  }
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    v.entries.emplace_back(ids[i],
                           static_cast<double>(j - i) * vocab.idf()[ids[i]]);
    i = j;
  }
  const double norm = v.Norm();
  if (norm > 0) {
    for (auto& [id, w] : v.entries) w /= norm;
  }
  return v;
}

double Cosine(const SparseVector& u, const SparseVector& v) {
  if (u.dimension != v.dimension) {
    throw InputError("cosine of vectors with dimensions " +
                     std::to_string(u.dimension) + " and " +
                     std::to_string(v.dimension));
  }
  const double nu = u.Norm();
  const double nv = v.Norm();
  if (nu == 0 || nv == 0) return 0.0;
  if (u.entries == v.entries) return 1.0;  // exact, free of rounding
  double dot = 0;
  auto a = u.entries.begin();
  auto b = v.entries.begin();
  while (a != u.entries.end() && b != v.entries.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      dot += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return std::clamp(dot / (nu * nv), -1.0, 1.0);
}

}  // namespace stylolab::textproc
