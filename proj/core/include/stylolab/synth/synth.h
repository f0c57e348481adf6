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


// Seeded generators for the shipped demonstration corpus: news articles
// grouped into multi-source stories, articles shared by far-right users,
// and social media posts written in three distinct styles.

#ifndef STYLOLAB_SYNTH_SYNTH_H_
#define STYLOLAB_SYNTH_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stylolab/common/random.h"
#include "stylolab/corpus/corpus.h"

namespace stylolab::synth {

struct PublisherSpec {
  std::string domain;
  corpus::Rating rating;
};

// Fictional publishers spanning the five-point scale.
const std::vector<PublisherSpec>& Publishers();

// `domain,rating` CSV for Publishers().
std::string PublishersCsv();

// Post generators: long formal sentences; short exclamatory second-person
// sentences; question-heavy casual sentences.
enum class PostStyle { kFormal, kExclamatory, kQuestioning };

std::string GeneratePost(PostStyle style, Rng& rng);

// per_class posts for each group: normal (formal), far_right (exclamatory)
// and antivax (questioning). Ids are "post-<group>-<n>".
std::vector<corpus::Document> GenerateGroupPosts(std::size_t per_class,
                                                 std::uint64_t seed);

// Posts carrying a style label, 63 in total: casual 22, empowerment 25,
// clickbait 2, expert 13, intimacy 1, split between far_right and antivax.
std::vector<corpus::Document> GenerateStyledPosts(std::uint64_t seed);

struct NewsOptions {
  std::size_t stories_per_topic = 5;
  std::size_t min_articles = 3;  // per story
  std::size_t max_articles = 6;
  std::size_t singletons_per_topic = 3;
  std::size_t shared_articles = 300;
  corpus::Timestamp start = 1667260800;  // 2022-11-01T00:00:00Z
};

// Produced articles (stories plus singletons) followed by shared articles.
// Facts of a story are repeated across publishers; left-leaning publishers
// include more of them than right-leaning ones.
std::vector<corpus::Document> GenerateNews(const NewsOptions& options,
                                           std::uint64_t seed);

struct SyntheticCorpus {
  std::vector<corpus::Document> articles;
  std::vector<corpus::Document> posts;
  std::string publishers_csv;
};

// 1,000 group posts per class plus the styled posts, and the default news.
SyntheticCorpus GenerateCorpus(std::uint64_t seed);

// Writes articles.jsonl, posts.jsonl and publishers.csv into `dir`.
void WriteCorpus(const SyntheticCorpus& corpus,
                 const std::filesystem::path& dir);

}  // namespace stylolab::synth

#endif  // STYLOLAB_SYNTH_SYNTH_H_
