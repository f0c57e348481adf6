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

// Document ingestion, publisher leaning and topic coverage.
//
// Documents arrive as UTF-8 JSON Lines, one object per line:
//
//   {"id": "a1", "text": "...", "title": "...", "publisher": "abc.net.au",
//    "topic": "World", "published_at": "2022-11-09T10:00:00Z",
//    "group_label": "far_right", "style_label": "casual",
//    "origin": "produced", "leaning": "left"}
//
// Only `id` and `text` are required. `published_at` may also be an integer
// number of seconds since the epoch. `leaning` accepts left/center/right,
// far_right, or any raw five-point rating. Unknown fields are ignored.

#ifndef STYLOLAB_CORPUS_CORPUS_H_
#define STYLOLAB_CORPUS_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stylolab/corpus/document.h"

namespace stylolab::corpus {

// Ordered, immutable collection of documents with unique ids.
class DocumentSet {
 public:
  DocumentSet() = default;
  // Throws InputError on duplicate or empty ids.
  explicit DocumentSet(std::vector<Document> documents,
                       std::vector<std::string> provenance = {});

  const std::vector<Document>& documents() const { return documents_; }
  const std::vector<std::string>& provenance() const { return provenance_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  const Document& operator[](std::size_t i) const { return documents_[i]; }
  auto begin() const { return documents_.begin(); }
  auto end() const { return documents_.end(); }

  // nullptr when absent.
  const Document* Find(std::string_view id) const;

  // Concatenation in argument order. Throws InputError on id collisions.
  static DocumentSet Merge(const DocumentSet& a, const DocumentSet& b);

  friend bool operator==(const DocumentSet& a, const DocumentSet& b) {
    return a.documents_ == b.documents_ && a.provenance_ == b.provenance_;
  }

 private:
  std::vector<Document> documents_;
  std::vector<std::string> provenance_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct SkipReason {
  std::size_t line = 0;
  std::string reason;
};

struct SkipReport {
  std::size_t skipped = 0;
  std::vector<SkipReason> reasons;

  // {"skipped": n, "reasons": [{"line": l, "reason": "..."}]}
  std::string ToJson() const;
};

struct LoadResult {
  DocumentSet documents;
  SkipReport skips;
};

// Reads a JSON Lines file. Unreadable files throw InputError; bad lines
// (invalid UTF-8, malformed JSON, missing id, empty text, duplicate id,
// invalid timestamp or label) are skipped and reported.
LoadResult LoadDocuments(const std::filesystem::path& path, DocumentKind kind);
LoadResult ParseDocuments(std::string_view content, DocumentKind kind,
                          std::string provenance = {});

// One JSON object per document, in set order, with every populated field.
std::string SerializeDocuments(const DocumentSet& docs);

Leaning3 ConsolidateLeaning(Rating raw);

// Lowercases and strips scheme, "www.", port and path.
std::string NormalizeDomain(std::string_view raw);

// Publisher domain -> raw rating.
class PublisherTable {
 public:
  // Throws InputError on duplicate (post-normalization) domains.
  void Add(std::string_view domain, Rating rating);
  const Rating* Find(std::string_view domain) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, Rating>& entries() const { return entries_; }

 private:
  std::map<std::string, Rating> entries_;
};

// CSV with header `domain,rating`.
PublisherTable ParsePublisherTable(std::string_view csv);
PublisherTable LoadPublisherTable(const std::filesystem::path& path);

struct LinkResult {
  DocumentSet documents;
  std::size_t matched = 0;
  std::size_t unmatched = 0;
};

// Fills `leaning` for documents whose publisher is in the table. Nothing
// else about a document changes; unmatched documents keep their leaning.
LinkResult LinkPublishers(const DocumentSet& docs, const PublisherTable& table);

struct CoverageRow {
  std::string topic;
  std::size_t counts[3] = {0, 0, 0};  // left, center, right
  std::size_t total = 0;
  int percent[3] = {0, 0, 0};  // rounded half away from zero
};

struct CoverageTable {
  std::vector<CoverageRow> rows;
  std::size_t included = 0;
  std::size_t excluded = 0;  // documents lacking topic or leaning

  std::string ToCsv() const;
  // Two-block layout: topics as columns, L/C/R/Total as rows, "n (p%)".
  std::string ToMarkdown() const;
};

// Topics appear in the Google News (AU) order first, then alphabetically.
CoverageTable BuildCoverageTable(const DocumentSet& docs);

// Integer percentage of count/total, rounded half away from zero.
int RoundedPercent(std::size_t count, std::size_t total);

// The fourteen Google News topic names, in the canonical display order.
const std::vector<std::string>& CanonicalTopics();

}  // namespace stylolab::corpus

#endif  // STYLOLAB_CORPUS_CORPUS_H_
