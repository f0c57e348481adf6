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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Pass criterion numbers to run a subset.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli/app.h"
#include "json.hpp"
#include "stylolab/common/csv.h"
#include "stylolab/common/io.h"
#include "stylolab/common/parallel.h"
#include "stylolab/common/random.h"
#include "stylolab/corpus/corpus.h"
#include "stylolab/learn/dataset.h"
#include "stylolab/learn/evaluate.h"
#include "stylolab/lexicon/features.h"
#include "stylolab/stats/stats.h"
#include "stylolab/stylovec/lgs.h"
#include "stylolab/synth/synth.h"
#include "stylolab/textproc/tokenizer.h"
#include "stylolab/trustindex/trust.h"
#include "support/lexicon_oracle.h"
#include "support/stats_oracle.h"
#include "support/trust_oracle.h"

namespace stylolab::acceptance {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20221101;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double v, int digits = 4) { return FormatFixed(v, digits); }

struct TrustRow {
  std::string topic;
  stats::GroupSummary left, right;
  double effect = 0;
  double p = 0;
};

std::vector<TrustRow> LoadPublishedTrust() {
  std::vector<TrustRow> out;
  const auto rows = ParseCsv(ReadFile(STYLOLAB_FIXTURE_DIR "/published_trust.csv"));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& c = rows[r].cells;
    out.push_back({c[0],
                   {std::stod(c[1]), std::stod(c[2]), std::stoul(c[3])},
                   {std::stod(c[7]), std::stod(c[8]), std::stoul(c[9])},
                   std::stod(c[10]),
                   std::stod(c[11])});
  }
  return out;
}

Outcome EffectSizes() {
  const auto start = Clock::now();
  std::vector<std::string> misses;
  const auto rows = LoadPublishedTrust();
  for (const TrustRow& r : rows) {
    const double d = stats::CohensD(r.left, r.right);
    if (std::fabs(d - r.effect) > 0.03) {
      misses.push_back(r.topic + " " + Fmt(d) + " vs " + Fmt(r.effect, 2));
    }
  }
  const double secs = Seconds(start);
  std::string detail = std::to_string(rows.size() - misses.size()) + "/" +
                       std::to_string(rows.size()) + " within 0.03";
  for (const auto& m : misses) detail += "; " + m;
  return {rows.size() == 14 && misses.empty() && secs < 1, detail};
}

Outcome SignificanceDirection() {
  const auto start = Clock::now();
  const std::set<std::string> topics = {
      "Top Stories", "Australia", "World", "Technology",
      "Sport", "China", "Finance", "Human migration"};
  std::size_t ok = 0, seen = 0;
  double worst = 0;
  for (const TrustRow& r : LoadPublishedTrust()) {
    if (!topics.contains(r.topic)) continue;
    ++seen;
    const double p = stats::WelchT(r.left, r.right).p;
    worst = std::max(worst, p);
    ok += p < 0.01;
  }
  return {seen == 8 && ok == 8 && Seconds(start) < 1,
          std::to_string(ok) + "/8 topics with p < 0.01, max p " +
              FormatDouble(worst)};
}

Outcome Bonferroni() {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", stats::BonferroniThreshold(0.05, 117));
  return {std::string(buf) == "4.2735e-04", std::string("alpha/m = ") + buf};
}

Outcome StatisticsOracle() {
  const auto start = Clock::now();
  double worst_p = 0, worst_d = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(DeriveSeed(kSeed, i));
    const std::size_t na = 2 + rng.UniformIndex(200);
    const std::size_t nb = 2 + rng.UniformIndex(200);
    const double shift = 2 * rng.UniformDouble() - 1;
    const double scale = 0.1 + 4 * rng.UniformDouble();
    std::vector<double> a(na), b(nb);
    for (double& x : a) x = rng.Normal();
    for (double& x : b) x = shift + scale * rng.Normal();
    const auto sa = stats::GroupSummary::FromSample(a);
    const auto sb = stats::GroupSummary::FromSample(b);
    const stats::TTestResult w = stats::WelchT(sa, sb);
    long double t, df;
    testing::ExtendedWelch(a, b, t, df);
    worst_p = std::max(worst_p, std::fabs(w.p - testing::QuadratureTwoSidedP(
                                                    static_cast<double>(t),
                                                    static_cast<double>(df))));
    const double d = stats::CohensD(sa, sb);
    worst_d = std::max(
        worst_d, std::fabs(d - static_cast<double>(testing::ExtendedCohensD(a, b))));
  }
  const double secs = Seconds(start);
  return {worst_p <= 1e-6 && worst_d <= 1e-12 && secs < 10,
          "max |dp| " + FormatDouble(worst_p) + ", max |dd| " +
              FormatDouble(worst_d) + ", " + Fmt(secs, 2) + " s"};
}

Outcome MatcherOracle() {
  const auto start = Clock::now();
  std::size_t equal = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(DeriveSeed(kSeed, 1000 + i));
    const lexicon::Lexicon lex = lexicon::ParseDic(testing::RandomDic(rng));
    const lexicon::Matcher matcher(lex);
    const auto tokens = textproc::Tokenize(testing::RandomLexiconText(rng));
    const FeatureVector fast = lexicon::ExtractDictFeatures(tokens, lex, matcher);
    const FeatureVector slow = testing::NaiveDictFeatures(tokens, lex);
    equal += fast.names == slow.names && fast.values == slow.values;
  }
  const double secs = Seconds(start);
  return {equal == 1000 && secs < 30, std::to_string(equal) +
                                          "/1000 pairs identical, " +
                                          Fmt(secs, 2) + " s"};
}

// Every story is checked against a naive average-linkage recomputation on
// independently computed similarities. When exhaustive search over all
// partitions finds exactly one clean clustering, that must match as well;
// similarities sitting on the threshold can leave none.
Outcome TrustOracle() {
  const auto start = Clock::now();
  std::size_t match = 0, exhaustive = 0, defined = 0, out_of_range = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(DeriveSeed(kSeed, 5000 + i));
    const testing::PlantedStory ps = testing::MakePlantedStory(rng, 12);
    std::vector<std::string> texts;
    for (const auto& s : ps.sentences) texts.push_back(s.text);
    const auto sim = testing::OracleSimilarity(texts);
    const auto want = testing::OracleDetailBlocks(
        testing::NaiveAverageLinkage(sim, texts.size(), 0.6), ps.sentences);
    const auto details = trustindex::ExtractDetails("a1", ps.sentences, 0.6);
    const auto got = testing::DetailBlocks(details, ps.sentences);
    bool ok = got == want;
    const auto feasible = testing::FeasiblePartitions(sim, texts.size(), 0.6);
    if (feasible.size() == 1) {
      ++exhaustive;
      ok = ok && got == testing::OracleDetailBlocks(feasible[0], ps.sentences);
    }
    const auto oracle = testing::OracleTrust(want, ps);
    for (const std::string& id : ps.story.members) {
      const auto score = trustindex::ComputeTrustIndex(id, ps.story, details);
      ok = ok && score.index == oracle.at(id);
      if (score.index) {
        ++defined;
        out_of_range += *score.index < 0 || *score.index > 1;
      }
    }
    match += ok;
  }
  const double secs = Seconds(start);
  return {match == 100 && out_of_range == 0 && secs < 60,
          std::to_string(match) + "/100 stories match (" +
              std::to_string(exhaustive) + " with a unique exhaustive " +
              "clustering), " + std::to_string(defined) +
              " defined indices, " + std::to_string(out_of_range) +
              " outside [0,1], " + Fmt(secs, 2) + " s"};
}

corpus::DocumentSet ShippedPosts() {
  auto loaded = corpus::LoadDocuments(
      fs::path(STYLOLAB_DATA_DIR) / "synthetic" / "posts.jsonl",
      corpus::DocumentKind::kPost);
  return std::move(loaded.documents);
}

// LGS features of the posts whose label is known, labelled by `label`.
learn::Dataset LgsDataset(
    const corpus::DocumentSet& posts,
    const std::function<std::optional<std::string>(const corpus::Document&)>&
        label) {
  std::vector<corpus::Document> keep;
  for (const auto& d : posts) {
    if (label(d)) keep.push_back(d);
  }
  const corpus::DocumentSet docs(std::move(keep));
  const auto tables = stylovec::ExtractLgsTables(
      docs, stylovec::LgsExtractors::Default(), DefaultWorkerCount());
  std::vector<std::string> labels;
  for (const std::string& id : tables.lgs.ids()) {
    labels.push_back(*label(*docs.Find(id)));
  }
  return learn::MakeDataset(tables.lgs, labels, learn::FeatureFamily::kLgs);
}

Outcome GroupClassification() {
  const auto start = Clock::now();
  const learn::Dataset all =
      LgsDataset(ShippedPosts(), [](const corpus::Document& d) {
        return d.group_label
                   ? std::optional<std::string>(corpus::ToString(*d.group_label))
                   : std::nullopt;
      });
  const learn::Dataset data =
      learn::BalanceClasses(all, 1000, DeriveSeed(kSeed, 1));
  const learn::EvalReport r = learn::CrossValidate(
      learn::ModelKind::kForest, data, 5, learn::Hyperparams{}, kSeed,
      DefaultWorkerCount());
  // Most confused unordered class pair by summed off-diagonal counts.
  std::size_t best = 0, bi = 0, bj = 0;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < r.classes.size(); ++j) {
      const std::size_t c = r.confusion[i][j] + r.confusion[j][i];
      if (c > best) best = c, bi = i, bj = j;
    }
  }
  const std::set<std::string> pair = {r.classes[bi], r.classes[bj]};
  const bool expected_pair =
      pair == std::set<std::string>{"antivax", "far_right"};
  const double secs = Seconds(start);
  return {r.accuracy >= 0.90 && r.macro_f1 >= 0.90 && expected_pair &&
              secs < 300,
          std::to_string(data.rows()) + " posts, accuracy " +
              Fmt(r.accuracy) + ", macro-F1 " + Fmt(r.macro_f1) +
              ", most confused " + r.classes[bi] + "/" + r.classes[bj] +
              " (" + std::to_string(best) + "), " + Fmt(secs, 1) + " s"};
}

Outcome SmallSampleStyles() {
  const learn::Dataset all =
      LgsDataset(ShippedPosts(), [](const corpus::Document& d) {
        if (!d.style_label) return std::optional<std::string>();
        return std::optional<std::string>(
            *d.style_label == corpus::StyleLabel::kEmpowerment ? "empowerment"
                                                               : "other");
      });
  const auto counts = all.ClassCounts();
  const std::size_t positives =
      counts[all.classes[0] == "empowerment" ? 0 : 1];
  learn::Hyperparams params;
  params.forest = learn::ForestParams::SmallSample();
  auto run = [&](int workers) {
    const learn::Dataset data =
        learn::BalanceClasses(all, positives, DeriveSeed(kSeed, 17));
    return learn::CrossValidate(learn::ModelKind::kForest, data, 2, params,
                                kSeed, workers);
  };
  const learn::EvalReport a = run(1), b = run(4);
  const bool identical = a.ToJson() == b.ToJson() &&
                         a.ToMarkdown("t") == b.ToMarkdown("t");
  const bool dispersion = a.fold_accuracy.size() == 2 &&
                          a.fold_macro_f1.size() == 2 &&
                          std::isfinite(a.accuracy_sd) &&
                          a.ToJson().find("accuracy_sd") != std::string::npos;
  const bool preset = params.forest.trees == 8 && params.forest.max_depth == 3;
  return {positives == 25 && preset && dispersion && identical,
          std::to_string(positives) + " positives, accuracy " +
              Fmt(a.accuracy) + " +/- " + Fmt(a.accuracy_sd) +
              ", reports " + (identical ? "identical" : "differ")};
}

// Artifacts of a run; manifests lose their wall-clock timings.
std::map<std::string, std::string> Artifacts(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = fs::relative(e.path(), dir).string();
    std::string content = ReadFile(e.path());
    if (rel.starts_with("manifest_")) {
      auto m = nlohmann::json::parse(content);
      m.erase("timings_ms");
      content = m.dump(2);
    }
    out[rel] = std::move(content);
  }
  return out;
}

Outcome PipelineDeterminism() {
  const fs::path root = fs::temp_directory_path() /
                        ("stylolab_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::string config =
      (fs::path(STYLOLAB_DATA_DIR) / "synthetic" / "stylolab.toml").string();
  std::vector<std::map<std::string, std::string>> runs;
  std::string error;
  for (const char* name : {"a", "b"}) {
    std::ostringstream out, err;
    const int code = cli::Main(
        {"pipeline", "--config", config, "--out", (root / name).string()}, out,
        err);
    if (code != 0) {
      error = "exit " + std::to_string(code) + ": " + err.str();
      break;
    }
    runs.push_back(Artifacts(root / name));
  }
  fs::remove_all(root);
  if (!error.empty()) return {false, error};
  std::size_t structured = 0, differing = 0;
  for (const auto& [rel, content] : runs[0]) {
    const auto it = runs[1].find(rel);
    const bool same = it != runs[1].end() && it->second == content;
    differing += !same;
    structured += rel.ends_with(".csv") || rel.ends_with(".json") ||
                  rel.ends_with(".jsonl");
  }
  const bool pass = differing == 0 && runs[0].size() == runs[1].size();
  return {pass, std::to_string(runs[0].size()) + " artifacts (" +
                    std::to_string(structured) + " CSV/JSON), " +
                    std::to_string(differing) + " differ"};
}

// ~500-token documents assembled from the post generators.
corpus::DocumentSet ThroughputCorpus(std::size_t n, double& mean_tokens) {
  std::vector<corpus::Document> docs(n);
  std::size_t tokens = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(DeriveSeed(kSeed, 100000 + i));
    std::string text;
    while (std::count(text.begin(), text.end(), ' ') < 420) {
      const auto style = static_cast<synth::PostStyle>(rng.UniformIndex(3));
      text += synth::GeneratePost(style, rng) + " ";
    }
    tokens += textproc::Tokenize(text).tokens.size();
    docs[i].id = "d" + std::to_string(i);
    docs[i].kind = corpus::DocumentKind::kPost;
    docs[i].text = std::move(text);
  }
  mean_tokens = static_cast<double>(tokens) / static_cast<double>(n);
  return corpus::DocumentSet(std::move(docs));
}

Outcome Throughput() {
  double mean_tokens = 0;
  const corpus::DocumentSet docs = ThroughputCorpus(10000, mean_tokens);
  const auto extractors = stylovec::LgsExtractors::Default();
  std::vector<double> secs;
  std::string reference;
  bool identical = true;
  for (int workers = 1; workers <= 4; ++workers) {
    const auto start = Clock::now();
    const auto tables = stylovec::ExtractLgsTables(docs, extractors, workers);
    secs.push_back(Seconds(start));
    const std::string csv = tables.lgs.ToCsv();
    if (workers == 1) {
      reference = csv;
    } else {
      identical = identical && csv == reference;
    }
  }
  bool monotone = true;
  for (std::size_t i = 1; i < secs.size(); ++i) {
    monotone = monotone && secs[i] < secs[i - 1];
  }
  std::string detail = "10000 docs, " + Fmt(mean_tokens, 0) +
                       " tokens/doc mean; seconds by workers 1..4:";
  for (double s : secs) detail += " " + Fmt(s, 2);
  detail += "; outputs " + std::string(identical ? "identical" : "differ");
  detail += "; " + std::to_string(std::thread::hardware_concurrency()) +
            " hardware threads";
  return {secs[0] < 10 && monotone && identical, detail};
}

struct Criterion {
  int number;
  std::string name;
  Outcome (*run)();
};

int Run(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "published effect sizes", EffectSizes},
      {2, "published significance", SignificanceDirection},
      {3, "Bonferroni constant", Bonferroni},
      {4, "statistics oracle", StatisticsOracle},
      {5, "matcher oracle", MatcherOracle},
      {6, "trust index oracle", TrustOracle},
      {7, "group classification", GroupClassification},
      {8, "small-sample styles", SmallSampleStyles},
      {9, "pipeline determinism", PipelineDeterminism},
      {10, "extraction throughput", Throughput},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : all) {
    if (!selected.empty() && !selected.contains(c.number)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %2d %s  %s: %s\n", c.number,
                o.pass ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace stylolab::acceptance

int main(int argc, char** argv) { return stylolab::acceptance::Run(argc, argv); }
