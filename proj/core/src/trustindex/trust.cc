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


#include "stylolab/trustindex/trust.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/parallel.h"
#include "stylolab/textproc/sentences.h"

namespace stylolab::trustindex {
namespace {

using textproc::SparseVector;

void ValidateOptions(const TrustOptions& o) {
  if (!(o.theta_story >= 0 && o.theta_story <= 1)) {
    throw InputError("theta_story must be in [0, 1]");
  }
  if (!(o.theta_detail >= 0 && o.theta_detail <= 1)) {
    throw InputError("theta_detail must be in [0, 1]");
  }
  if (o.window_seconds < 0) throw InputError("story window must be >= 0");
}

// Title plus the first `lead` sentences of the body.
std::string StoryText(const corpus::Document& doc, std::size_t lead) {
  std::string out = doc.title.value_or("");
  textproc::SentenceList sentences = textproc::SplitSentences(doc.text);
  for (std::size_t i = 0; i < sentences.size() && i < lead; ++i) {
    out += '\n';
    out += sentences[i].Text(doc.text);
  }
  return out;
}

std::vector<SparseVector> Vectorize(std::span<const std::string> texts,
                                    int workers) {
  std::vector<textproc::TokenStream> tokens(texts.size());
  ParallelFor(texts.size(), workers,
              [&](std::size_t i) { tokens[i] = textproc::Tokenize(texts[i]); });
  textproc::Vocabulary vocab = textproc::TfidfFit(tokens);
  std::vector<SparseVector> out(texts.size());
  ParallelFor(texts.size(), workers, [&](std::size_t i) {
    out[i] = textproc::TfidfVector(tokens[i], vocab);
  });
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string FormatOptional(const std::optional<double>& v, int digits) {
  return v ? FormatFixed(*v, digits) : "NA";
}

std::string FormatP(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), p < 1e-4 ? "%.2e" : "%.4f", p);
  return buf;
}

}  // namespace

StoryGrouping GroupStories(const corpus::DocumentSet& docs,
                           const TrustOptions& options) {
  ValidateOptions(options);
  StoryGrouping out;
  std::vector<const corpus::Document*> eligible;
  for (const corpus::Document& d : docs) {
    if (d.topic && d.published_at) {
      eligible.push_back(&d);
    } else {
      out.skipped.push_back(d.id);
    }
  }
  std::sort(out.skipped.begin(), out.skipped.end());
  // Canonical order so that ids, not input positions, drive everything below.
  std::sort(eligible.begin(), eligible.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });
  if (eligible.empty()) return out;

  std::vector<std::string> texts(eligible.size());
  ParallelFor(eligible.size(), options.workers, [&](std::size_t i) {
    texts[i] = StoryText(*eligible[i], options.lead_sentences);
  });
  std::vector<SparseVector> vectors = Vectorize(texts, options.workers);

  std::map<std::string, std::vector<std::size_t>> by_topic;
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    by_topic[*eligible[i]->topic].push_back(i);
  }
  UnionFind uf(eligible.size());
  for (auto& [topic, members] : by_topic) {
    std::stable_sort(members.begin(), members.end(),
                     [&](std::size_t a, std::size_t b) {
                       return *eligible[a]->published_at <
                              *eligible[b]->published_at;
                     });
    for (std::size_t x = 0; x < members.size(); ++x) {
      const corpus::Timestamp tx = *eligible[members[x]]->published_at;
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (*eligible[members[y]]->published_at - tx > options.window_seconds) {
          break;
        }
        if (textproc::Cosine(vectors[members[x]], vectors[members[y]]) >=
            options.theta_story) {
          uf.Union(members[x], members[y]);
        }
      }
    }
  }

  // Roots are the smallest index, hence the smallest id, of each component.
  std::map<std::size_t, std::size_t> root_to_story;
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    const std::size_t root = uf.Find(i);
    auto [it, fresh] = root_to_story.try_emplace(root, out.stories.size());
    const corpus::Document& d = *eligible[i];
    if (fresh) {
      Story s;
      s.story_id = eligible[root]->id;
      s.topic = *d.topic;
      s.first = s.last = *d.published_at;
      out.stories.push_back(std::move(s));
    }
    Story& s = out.stories[it->second];
    s.members.push_back(d.id);
    s.first = std::min(s.first, *d.published_at);
    s.last = std::max(s.last, *d.published_at);
  }
  return out;
}

std::int64_t QuantizeSimilarity(double s) {
  return std::llround(s * kSimilarityScale);
}

std::vector<std::vector<std::size_t>> AverageLinkage(
    std::span<const SparseVector> vectors, double theta) {
  const std::size_t n = vectors.size();
  __extension__ typedef __int128 Wide;
  // sum[a][b]: total quantized similarity between the clusters anchored at
  // a and b; a cluster is anchored at its smallest index. Integer sums make
  // averages independent of merge history, so ties are exact. Sums stay below 2^63 for stories of up to
  // 90000 sentences; memory runs out long before that.
  std::vector<std::int64_t> sum(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum[i * n + j] = sum[j * n + i] =
          QuantizeSimilarity(textproc::Cosine(vectors[i], vectors[j]));
    }
  }
  const std::int64_t q_theta = QuantizeSimilarity(theta);
  std::vector<std::int64_t> size(n, 1);
  std::vector<std::size_t> owner(n);
  std::iota(owner.begin(), owner.end(), std::size_t{0});
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t{0});

  while (active.size() > 1) {
    bool found = false;
    std::size_t ba = 0, bb = 0;
    // Scanning anchors in increasing order with a strict comparison keeps
    // the lexicographically smallest pair among equal averages.
    for (std::size_t x = 0; x < active.size(); ++x) {
      const std::size_t a = active[x];
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        const std::size_t b = active[y];
        // avg(a,b) > avg(ba,bb) without division.
        if (!found || Wide{sum[a * n + b]} * size[ba] * size[bb] >
                          Wide{sum[ba * n + bb]} * size[a] * size[b]) {
          found = true;
          ba = a;
          bb = b;
        }
      }
    }
    if (!found ||
        Wide{sum[ba * n + bb]} < Wide{q_theta} * size[ba] * size[bb]) {
      break;
    }
    for (std::size_t k : active) {
      if (k == ba || k == bb) continue;
      sum[ba * n + k] += sum[bb * n + k];
      sum[k * n + ba] = sum[ba * n + k];
    }
    size[ba] += size[bb];
    for (std::size_t i = 0; i < n; ++i) {
      if (owner[i] == bb) owner[i] = ba;
    }
    active.erase(std::find(active.begin(), active.end(), bb));
  }

  std::vector<std::vector<std::size_t>> clusters;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t& s = slot[owner[i]];
    if (s == n) {
      s = clusters.size();
      clusters.emplace_back();
    }
    clusters[s].push_back(i);
  }
  return clusters;
}

std::vector<StorySentence> CollectSentences(const Story& story,
                                            const corpus::DocumentSet& docs) {
  std::vector<std::string> ids = story.members;
  std::sort(ids.begin(), ids.end());
  std::vector<StorySentence> out;
  for (const std::string& id : ids) {
    const corpus::Document* doc = docs.Find(id);
    if (!doc) throw InputError("story member '" + id + "' is not in the corpus");
    std::string source = doc->publisher.value_or(doc->id);
    textproc::SentenceList sentences = textproc::SplitSentences(doc->text);
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      out.push_back({{id, i}, source, std::string(sentences[i].Text(doc->text))});
    }
  }
  return out;
}

std::vector<Detail> ExtractDetails(const std::string& story_id,
                                   std::span<const StorySentence> sentences,
                                   double theta_detail) {
  if (!(theta_detail >= 0 && theta_detail <= 1)) {
    throw InputError("theta_detail must be in [0, 1]");
  }
  std::set<std::string_view> sources;
  for (const StorySentence& s : sentences) sources.insert(s.source);
  if (sources.size() < 2) return {};

  std::vector<std::string> texts;
  texts.reserve(sentences.size());
  for (const StorySentence& s : sentences) texts.push_back(s.text);
  std::vector<SparseVector> vectors = Vectorize(texts, 1);

  std::vector<Detail> out;
  for (const auto& cluster : AverageLinkage(vectors, theta_detail)) {
    if (cluster.size() < 2) continue;
    std::set<std::string_view> cluster_sources;
    for (std::size_t i : cluster) cluster_sources.insert(sentences[i].source);
    if (cluster_sources.size() < 2) continue;
    Detail d;
    d.detail_id = story_id + "#" + std::to_string(out.size() + 1);
    for (std::size_t i : cluster) d.sentences.push_back(sentences[i].ref);
    std::sort(d.sentences.begin(), d.sentences.end());
    d.publisher_count = cluster_sources.size();
    out.push_back(std::move(d));
  }
  return out;
}

TrustScore ComputeTrustIndex(const std::string& article_id, const Story& story,
                             std::span<const Detail> details) {
  if (std::find(story.members.begin(), story.members.end(), article_id) ==
      story.members.end()) {
    throw InputError("article '" + article_id + "' is not a member of story '" +
                     story.story_id + "'");
  }
  TrustScore score;
  score.article_id = article_id;
  score.story_id = story.story_id;
  score.total = details.size();
  for (const Detail& d : details) {
    for (const SentenceRef& s : d.sentences) {
      if (s.article_id == article_id) {
        ++score.covered;
        break;
      }
    }
  }
  if (score.total > 0) {
    score.index = static_cast<double>(score.covered) /
                  static_cast<double>(score.total);
  }
  return score;
}

TrustResult ScoreCorpus(const corpus::DocumentSet& docs,
                        const TrustOptions& options) {
  TrustResult result;
  result.grouping = GroupStories(docs, options);
  const auto& stories = result.grouping.stories;
  result.details.resize(stories.size());
  ParallelFor(stories.size(), options.workers, [&](std::size_t i) {
    std::vector<StorySentence> sentences = CollectSentences(stories[i], docs);
    result.details[i] =
        ExtractDetails(stories[i].story_id, sentences, options.theta_detail);
  });
  for (std::size_t i = 0; i < stories.size(); ++i) {
    for (const std::string& id : stories[i].members) {
      result.scores.push_back(
          ComputeTrustIndex(id, stories[i], result.details[i]));
    }
  }
  return result;
}

std::string TrustResult::StoriesCsv() const {
  CsvWriter w;
  w.AddRow({"story_id", "topic", "size", "first", "last", "members"});
  for (const Story& s : grouping.stories) {
    std::string members;
    for (const std::string& m : s.members) {
      if (!members.empty()) members += ';';
      members += m;
    }
    w.AddRow({s.story_id, s.topic, std::to_string(s.members.size()),
              corpus::FormatTimestamp(s.first), corpus::FormatTimestamp(s.last),
              members});
  }
  return w.str();
}

std::string TrustResult::DetailsCsv() const {
  CsvWriter w;
  w.AddRow({"story_id", "detail_id", "publisher_count", "article_id",
            "sentence_index"});
  for (std::size_t i = 0; i < details.size(); ++i) {
    for (const Detail& d : details[i]) {
      for (const SentenceRef& s : d.sentences) {
        w.AddRow({grouping.stories[i].story_id, d.detail_id,
                  std::to_string(d.publisher_count), s.article_id,
                  std::to_string(s.index)});
      }
    }
  }
  return w.str();
}

std::string TrustResult::ScoresCsv() const {
  CsvWriter w;
  w.AddRow({"article_id", "story_id", "covered", "total", "index"});
  for (const TrustScore& s : scores) {
    w.AddRow({s.article_id, s.story_id, std::to_string(s.covered),
              std::to_string(s.total),
              s.index ? FormatDouble(*s.index) : std::string("NA")});
  }
  return w.str();
}

TrustTable BuildTrustTable(const corpus::DocumentSet& docs,
                           std::span<const TrustScore> scores,
                           stats::TTestForm form) {
  TrustTable table;
  std::map<std::string, std::vector<double>[3]> values;
  for (const TrustScore& s : scores) {
    if (!s.index) {
      ++table.undefined_excluded;
      continue;
    }
    const corpus::Document* doc = docs.Find(s.article_id);
    if (!doc || !doc->topic || !doc->leaning) {
      ++table.unlabeled_excluded;
      continue;
    }
    values[*doc->topic][static_cast<int>(doc->leaning->value)].push_back(
        *s.index);
  }

  std::vector<std::string> order;
  for (const std::string& t : corpus::CanonicalTopics()) {
    if (values.contains(t)) order.push_back(t);
  }
  for (const auto& [t, v] : values) {
    if (std::find(order.begin(), order.end(), t) == order.end()) {
      order.push_back(t);
    }
  }

  for (const std::string& topic : order) {
    const auto& v = values[topic];
    TrustTableRow row;
    row.topic = topic;
    for (int k = 0; k < 3; ++k) {
      row.counts[k] = v[k].size();
      if (v[k].size() >= 2) row.groups[k] = stats::GroupSummary::FromSample(v[k]);
    }
    const int kL = static_cast<int>(corpus::Lean::kLeft);
    const int kR = static_cast<int>(corpus::Lean::kRight);
    if (row.groups[kL] && row.groups[kR]) {
      row.test = stats::TTest(*row.groups[kL], *row.groups[kR], form);
      if (stats::PooledSd(*row.groups[kL], *row.groups[kR]) > 0) {
        row.d = stats::CohensD(*row.groups[kL], *row.groups[kR]);
      } else {
        row.note = "zero variance in both groups";
      }
    } else {
      row.note = "not computable: fewer than two scores for left or right";
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string TrustTable::ToCsv() const {
  CsvWriter w;
  w.AddRow({"topic", "mu_l", "sd_l", "n_l", "mu_c", "sd_c", "n_c", "mu_r",
            "sd_r", "n_r", "d", "abs_d", "t", "df", "p", "note"});
  for (const TrustTableRow& r : rows) {
    std::vector<std::string> cells = {r.topic};
    for (int k = 0; k < 3; ++k) {
      cells.push_back(r.groups[k] ? FormatDouble(r.groups[k]->mean) : "NA");
      cells.push_back(r.groups[k] ? FormatDouble(r.groups[k]->sd) : "NA");
      cells.push_back(std::to_string(r.counts[k]));
    }
    cells.push_back(r.d ? FormatDouble(*r.d) : "NA");
    cells.push_back(r.d ? FormatDouble(std::fabs(*r.d)) : "NA");
    cells.push_back(r.test ? FormatDouble(r.test->t) : "NA");
    cells.push_back(r.test ? FormatDouble(r.test->df) : "NA");
    cells.push_back(r.test ? FormatDouble(r.test->p) : "NA");
    cells.push_back(r.note);
    w.AddRow(cells);
  }
  return w.str();
}

std::string TrustTable::ToMarkdown() const {
  std::string out =
      "Trust Index statistics of news articles by topic and political "
      "leaning.\n\n";
  if (rows.empty()) {
    out += "(no defined scores)\n";
  } else {
    out +=
        "| Topic | μ L | σ L | N L | μ C | σ C | N C | μ R | σ R | N R | "
        "Effect size | p-value |\n"
        "|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    for (const TrustTableRow& r : rows) {
      out += "| " + r.topic + " |";
      for (int k = 0; k < 3; ++k) {
        std::optional<double> mu, sd;
        if (r.groups[k]) {
          mu = r.groups[k]->mean;
          sd = r.groups[k]->sd;
        }
        out += " " + FormatOptional(mu, 2) + " | " + FormatOptional(sd, 2) +
               " | " + std::to_string(r.counts[k]) + " |";
      }
      std::optional<double> abs_d;
      if (r.d) abs_d = std::fabs(*r.d);
      out += " " + FormatOptional(abs_d, 2) + " | " +
             (r.test ? FormatP(r.test->p) : std::string("NA")) + " |\n";
    }
  }
  out += "\nExcluded: " + std::to_string(undefined_excluded) +
         " undefined (single-source stories), " +
         std::to_string(unlabeled_excluded) + " without topic or leaning\n";
  return out;
}

}  // namespace stylolab::trustindex
