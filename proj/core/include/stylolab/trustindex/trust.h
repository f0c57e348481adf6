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


// Informational completeness of news articles. Articles about the same event
// form a story; sentences repeated across publishers within a story form
// details; an article's trust index is the share of its story's details it
// covers.

#ifndef STYLOLAB_TRUSTINDEX_TRUST_H_
#define STYLOLAB_TRUSTINDEX_TRUST_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stylolab/corpus/corpus.h"
#include "stylolab/stats/stats.h"
#include "stylolab/textproc/tfidf.h"

namespace stylolab::trustindex {

struct TrustOptions {
  double theta_story = 0.35;
  double theta_detail = 0.60;
  corpus::Timestamp window_seconds = 72 * 3600;
  std::size_t lead_sentences = 3;  // sentences of the body used for stories
  int workers = 1;
};

struct Story {
  std::string story_id;  // smallest member id
  std::string topic;
  std::vector<std::string> members;  // ascending
  corpus::Timestamp first = 0;
  corpus::Timestamp last = 0;
};

struct StoryGrouping {
  std::vector<Story> stories;  // ascending story_id
  std::vector<std::string> skipped;  // ids lacking topic or published_at
};

// Same-topic articles are linked when the cosine of their title-plus-lead
// TF-IDF vectors is >= theta_story and they are at most window_seconds apart;
// stories are the connected components. The vocabulary is fit on all
// eligible articles, so the result does not depend on input order.
StoryGrouping GroupStories(const corpus::DocumentSet& docs,
                           const TrustOptions& options = {});

// Sentence `index` of article `article_id`.
struct SentenceRef {
  std::string article_id;
  std::size_t index = 0;

  friend auto operator<=>(const SentenceRef&, const SentenceRef&) = default;
};

struct Detail {
  std::string detail_id;              // "<story_id>#<n>"
  std::vector<SentenceRef> sentences;  // ascending
  std::size_t publisher_count = 0;
};

// Cosines are rounded to multiples of 1 / kSimilarityScale before
// clustering so that sums and comparisons are exact integers.
inline constexpr double kSimilarityScale = 4294967296.0;  // 2^32

std::int64_t QuantizeSimilarity(double s);

// Average-linkage agglomerative clustering over cosine similarity. Clusters
// merge while their mean pairwise similarity is >= theta, best pair first;
// equal averages merge the pair with the smaller (min id, min id) first.
// Returns clusters as ascending index lists ordered by their first index.
std::vector<std::vector<std::size_t>> AverageLinkage(
    std::span<const textproc::SparseVector> vectors, double theta);

// One sentence of a story, ready for clustering. `source` is the publisher,
// or the article id when the publisher is unknown.
struct StorySentence {
  SentenceRef ref;
  std::string source;
  std::string text;
};

// Sentences in (article id, sentence index) order for the story members.
std::vector<StorySentence> CollectSentences(const Story& story,
                                            const corpus::DocumentSet& docs);

// Clusters the sentences (TF-IDF fit within the story) and keeps clusters
// with sentences from >= 2 distinct sources. Zero details when fewer than
// two sources are present.
std::vector<Detail> ExtractDetails(const std::string& story_id,
                                   std::span<const StorySentence> sentences,
                                   double theta_detail);

struct TrustScore {
  std::string article_id;
  std::string story_id;
  std::size_t covered = 0;
  std::size_t total = 0;
  std::optional<double> index;  // absent when total == 0
};

// Throws InputError if the article is not a member of the story.
TrustScore ComputeTrustIndex(const std::string& article_id, const Story& story,
                             std::span<const Detail> details);

struct TrustResult {
  StoryGrouping grouping;
  std::vector<std::vector<Detail>> details;  // parallel to grouping.stories
  std::vector<TrustScore> scores;            // story order, then member order

  std::string StoriesCsv() const;
  std::string DetailsCsv() const;
  // article_id,story_id,covered,total,index (NA when undefined)
  std::string ScoresCsv() const;
};

TrustResult ScoreCorpus(const corpus::DocumentSet& docs,
                        const TrustOptions& options = {});

struct TrustTableRow {
  std::string topic;
  std::optional<stats::GroupSummary> groups[3];  // left, center, right
  std::size_t counts[3] = {0, 0, 0};
  // Left versus right; absent when either side has fewer than two scores.
  std::optional<stats::TTestResult> test;
  std::optional<double> d;
  std::string note;
};

struct TrustTable {
  std::vector<TrustTableRow> rows;  // canonical topic order, then by name
  std::size_t undefined_excluded = 0;
  std::size_t unlabeled_excluded = 0;  // no topic or leaning

  // topic,mu_l,sd_l,n_l,mu_c,sd_c,n_c,mu_r,sd_r,n_r,d,abs_d,t,df,p
  std::string ToCsv() const;
  std::string ToMarkdown() const;
};

TrustTable BuildTrustTable(const corpus::DocumentSet& docs,
                           std::span<const TrustScore> scores,
                           stats::TTestForm form = stats::TTestForm::kWelch);

}  // namespace stylolab::trustindex

#endif  // STYLOLAB_TRUSTINDEX_TRUST_H_
