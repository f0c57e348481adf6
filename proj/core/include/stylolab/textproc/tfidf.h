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

#ifndef STYLOLAB_TEXTPROC_TFIDF_H_
#define STYLOLAB_TEXTPROC_TFIDF_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stylolab/textproc/tokenizer.h"

namespace stylolab::textproc {

// Sparse vector with strictly increasing term ids and no explicit zeros.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;
  std::size_t dimension = 0;

  double Norm() const;
  bool IsZero() const { return entries.empty(); }
};

struct TfidfOptions {
  // Normalized forms excluded from the vocabulary. Empty by default.
  std::unordered_set<std::string> stopwords;
};

// Terms sorted lexicographically; idf(t) = ln((1 + N) / (1 + df(t))) + 1.
class Vocabulary {
 public:
  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<double>& idf() const { return idf_; }
  std::size_t document_count() const { return document_count_; }

  // Returns -1 when the term is out of vocabulary.
  std::int64_t IdOf(std::string_view term) const;

  const TfidfOptions& options() const { return options_; }

 private:
  friend Vocabulary TfidfFit(std::span<const TokenStream>, TfidfOptions);

  std::vector<std::string> terms_;
  std::vector<double> idf_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t document_count_ = 0;
  TfidfOptions options_;
};

// Terms are the normalized forms of word and number tokens not in the
// stopword list. Throws InputError on an empty corpus.
Vocabulary TfidfFit(std::span<const TokenStream> corpus,
                    TfidfOptions options = {});

// Raw term frequency times idf, then L2-normalized. Out-of-vocabulary terms
// are dropped; a document with no known term maps to the zero vector.
SparseVector TfidfVector(const TokenStream& doc, const Vocabulary& vocab);

// dot(u, v) / (|u| |v|), 0 when either norm is 0. Throws InputError when
// the dimensions differ.
double Cosine(const SparseVector& u, const SparseVector& v);

}  // namespace stylolab::textproc

#endif  // STYLOLAB_TEXTPROC_TFIDF_H_
