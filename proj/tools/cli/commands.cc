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


#include "commands.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/feature_table.h"
#include "stylolab/common/io.h"
#include "stylolab/common/random.h"
#include "stylolab/corpus/corpus.h"
#include "stylolab/learn/evaluate.h"
#include "stylolab/lexicon/features.h"
#include "stylolab/lexicon/lexicon.h"
#include "stylolab/stats/stats.h"
#include "stylolab/stylovec/lgs.h"
#include "stylolab/stylovec/stylo.h"
#include "stylolab/trustindex/trust.h"
#include "svg.h"

namespace stylolab::cli {
namespace {

using corpus::Document;
using corpus::DocumentKind;
using corpus::DocumentSet;
using nlohmann::ordered_json;

std::string Slug(std::string_view s) {
  std::string out;
  for (char c : s) {
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if (alnum) {
      out.push_back(c);
    } else if (!out.empty() && out.back() != '_') {
      out.push_back('_');
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "_" : out;
}

std::string Json(const ordered_json& j) { return j.dump(2) + "\n"; }

// Prefixes errors raised while parsing a file with its path.
template <typename Fn>
auto ParseFile(const fs::path& path, Fn&& parse) {
  const std::string text = ReadFile(path);
  try {
    return parse(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

bool IsProducedArticle(const Document& d) {
  return d.kind == DocumentKind::kArticle &&
         d.origin == corpus::Origin::kProduced;
}

DocumentSet Filter(const DocumentSet& docs,
                   const std::function<bool(const Document&)>& keep) {
  std::vector<Document> out;
  for (const Document& d : docs) {
    if (keep(d)) out.push_back(d);
  }
  return DocumentSet(std::move(out));
}

DocumentSet LoadIngested(StageRun& run) {
  RequireStage(run.out(), "ingest");
  const std::string rel = "ingest/documents.jsonl";
  run.AddUpstream(rel);
  return corpus::LoadDocuments(run.out() / rel, DocumentKind::kArticle)
      .documents;
}

FeatureTable LoadFamily(StageRun& run, const std::string& family) {
  const std::string rel = "features/" + family + ".csv";
  run.AddUpstream(rel);
  return FeatureTable::FromCsv(ReadFile(run.out() / rel));
}

std::string FamilyTitle(const std::string& family) {
  if (family == "lgs") return "LGS";
  if (family == "liwc") return "LIWC";
  if (family == "grievance") return "Grievance";
  if (family == "stylo") return "Stylo";
  if (family == "embedding") return "Embedding";
  return family;
}

std::string ModelTitle(learn::ModelKind k) {
  switch (k) {
    case learn::ModelKind::kLogReg: return "Logistic Regression";
    case learn::ModelKind::kLinSvm: return "Linear SVC";
    case learn::ModelKind::kForest: return "Random Forest";
  }
  return "?";
}

std::string Fixed2(double v) { return FormatFixed(v, 2); }

// ---------------------------------------------------------------- ingest

void Ingest(const RunConfig& c, StageRun& run, Streams io) {
  if (c.input.articles.empty() && c.input.posts.empty()) {
    throw InputError("nothing to ingest: set input.articles and/or "
                     "input.posts");
  }
  DocumentSet docs;
  ordered_json skips = ordered_json::object();
  std::size_t skipped = 0;
  auto load = [&](const fs::path& path, DocumentKind kind, const char* name) {
    if (path.empty()) return;
    run.AddInput(path);
    corpus::LoadResult r = corpus::LoadDocuments(path, kind);
    skips[name] = ordered_json::parse(r.skips.ToJson());
    skipped += r.skips.skipped;
    for (const corpus::SkipReason& s : r.skips.reasons) {
      io.warn << "warning: " << path.string() << ":" << s.line
              << ": skipped: " << s.reason << "\n";
    }
    docs = DocumentSet::Merge(docs, r.documents);
  };
  load(c.input.articles, DocumentKind::kArticle, "articles");
  load(c.input.posts, DocumentKind::kPost, "posts");

  ordered_json summary;
  if (!c.input.publishers.empty()) {
    run.AddInput(c.input.publishers);
    corpus::PublisherTable table = ParseFile(
        c.input.publishers,
        [](const std::string& t) { return corpus::ParsePublisherTable(t); });
    corpus::LinkResult linked = corpus::LinkPublishers(docs, table);
    docs = std::move(linked.documents);
    summary["publishers"] = table.size();
    summary["publisher_matched"] = linked.matched;
    summary["publisher_unmatched"] = linked.unmatched;
  }
  run.Lap("load");

  std::size_t articles = 0, posts = 0;
  for (const Document& d : docs) {
    (d.kind == DocumentKind::kArticle ? articles : posts) += 1;
  }
  summary["documents"] = docs.size();
  summary["articles"] = articles;
  summary["posts"] = posts;
  summary["skipped"] = skipped;

  const corpus::CoverageTable coverage =
      corpus::BuildCoverageTable(Filter(docs, IsProducedArticle));
  run.Write("ingest/documents.jsonl", corpus::SerializeDocuments(docs));
  run.Write("ingest/skips.json", Json(skips));
  run.Write("ingest/coverage.csv", coverage.ToCsv());
  run.Write("ingest/coverage.md", coverage.ToMarkdown());
  run.Write("ingest/summary.json", Json(summary));
  run.Lap("write");
  io.log << "ingest: " << docs.size() << " documents (" << articles
         << " articles, " << posts << " posts), " << skipped
         << " lines skipped\n";
}

// -------------------------------------------------------------- features

stylovec::LgsExtractors BuildExtractors(const InputPaths& in, StageRun& run) {
  lexicon::LiwcConfig liwc = lexicon::LiwcConfig::Default();
  if (!in.liwc_lexicon.empty()) {
    run.AddInput(in.liwc_lexicon);
    liwc.lexicon = ParseFile(in.liwc_lexicon, [](const std::string& t) {
      return lexicon::ParseDic(t);
    });
    // Shipped composites refer to shipped categories.
    if (in.liwc_composites.empty()) liwc.composites.reset();
  }
  if (!in.liwc_composites.empty()) {
    run.AddInput(in.liwc_composites);
    liwc.composites = ParseFile(in.liwc_composites, [](const std::string& t) {
      return lexicon::ParseComposites(t);
    });
  }
  if (!in.liwc_blocklist.empty()) {
    run.AddInput(in.liwc_blocklist);
    liwc.blocklist = ParseFile(in.liwc_blocklist, [](const std::string& t) {
      return lexicon::ParseBlocklist(t);
    });
  }
  lexicon::GrievanceExtractor grievance =
      lexicon::GrievanceExtractor::Default();
  if (!in.grievance_lexicon.empty()) {
    run.AddInput(in.grievance_lexicon);
    grievance = lexicon::GrievanceExtractor(
        ParseFile(in.grievance_lexicon,
                  [](const std::string& t) { return lexicon::ParseDic(t); }));
  }
  stylovec::StyloExtractor stylo;
  if (!in.closed_classes.empty()) {
    run.AddInput(in.closed_classes);
    stylo = stylovec::StyloExtractor(
        stylovec::LoadClosedClasses(in.closed_classes));
  }
  return stylovec::LgsExtractors{lexicon::LiwcExtractor(std::move(liwc)),
                                 std::move(grievance), std::move(stylo)};
}

void Features(const RunConfig& c, StageRun& run, Streams io) {
  const DocumentSet docs = LoadIngested(run);
  const stylovec::LgsExtractors ex = BuildExtractors(c.input, run);
  for (const std::string& note : ex.liwc.notes()) {
    run.Note(note);
    io.warn << "warning: " << note << "\n";
  }
  run.Lap("load");
  const stylovec::LgsTables t = stylovec::ExtractLgsTables(docs, ex, c.workers);
  run.Lap("extract");
  run.Write("features/liwc.csv", t.liwc.ToCsv());
  run.Write("features/grievance.csv", t.grievance.ToCsv());
  run.Write("features/stylo.csv", t.stylo.ToCsv());
  run.Write("features/lgs.csv", t.lgs.ToCsv());
  CsvWriter excl;
  excl.AddRow({"id", "reason"});
  for (const auto& [id, reason] : t.excluded) excl.AddRow({id, reason});
  run.Write("features/exclusions.csv", excl.str());
  run.Write("features/stylo_schema.json", stylovec::SchemaJson());
  run.Lap("write");
  if (!t.excluded.empty()) {
    io.warn << "warning: " << t.excluded.size()
            << " documents without words excluded; see "
               "features/exclusions.csv\n";
  }
  io.log << "features: " << t.lgs.rows() << " documents, "
         << t.liwc.cols() << " liwc + " << t.grievance.cols()
         << " grievance + " << t.stylo.cols() << " stylo columns\n";
}

// ----------------------------------------------------------------- trust

void Trust(const RunConfig& c, StageRun& run, Streams io) {
  const DocumentSet produced = Filter(LoadIngested(run), IsProducedArticle);
  run.Lap("load");
  const trustindex::TrustResult result =
      trustindex::ScoreCorpus(produced, c.trust);
  run.Lap("score");
  const trustindex::TrustTable table = trustindex::BuildTrustTable(
      produced, result.scores, c.compare.options.form);

  std::size_t multi_source = 0, details = 0, defined = 0;
  for (const auto& d : result.details) {
    if (!d.empty()) ++multi_source;
    details += d.size();
  }
  for (const auto& s : result.scores) {
    if (s.index) ++defined;
  }
  ordered_json summary;
  summary["articles"] = produced.size();
  summary["stories"] = result.grouping.stories.size();
  summary["stories_with_details"] = multi_source;
  summary["details"] = details;
  summary["scored"] = result.scores.size();
  summary["defined"] = defined;
  summary["skipped"] = result.grouping.skipped.size();
  summary["undefined_excluded"] = table.undefined_excluded;
  summary["unlabeled_excluded"] = table.unlabeled_excluded;

  run.Write("trust/stories.csv", result.StoriesCsv());
  run.Write("trust/details.csv", result.DetailsCsv());
  run.Write("trust/scores.csv", result.ScoresCsv());
  run.Write("trust/trust_table.csv", table.ToCsv());
  run.Write("trust/trust_table.md", table.ToMarkdown());
  run.Write("trust/summary.json", Json(summary));
  run.Lap("write");
  if (multi_source == 0) {
    const std::string msg =
        "no multi-source stories; the trust table has no defined scores";
    run.Note(msg);
    io.warn << "warning: " << msg << "\n";
  }
  io.log << "trust: " << result.grouping.stories.size() << " stories, "
         << details << " details, " << defined << " of "
         << result.scores.size() << " articles with a defined index\n";
}

// --------------------------------------------------------------- compare

// Two document groups; Side returns 0 for A, 1 for B, nullopt for neither.
struct Grouping {
  std::string name;  // file stem
  std::string label_a;
  std::string label_b;
  bool by_topic = true;
  std::function<std::optional<int>(const Document&)> side;
};

std::vector<Grouping> Groupings(const std::string& by) {
  using corpus::GroupLabel;
  if (by == "far_right") {
    return {{"far_right", "Moderate", "Far-right", true,
             [](const Document& d) -> std::optional<int> {
               if (!IsProducedArticle(d) || !d.leaning) return std::nullopt;
               return d.leaning->far_right ? 1 : 0;
             }}};
  }
  if (by == "origin") {
    return {{"origin", "Produced", "Shared", true,
             [](const Document& d) -> std::optional<int> {
               if (d.kind != DocumentKind::kArticle) return std::nullopt;
               return d.origin == corpus::Origin::kProduced ? 0 : 1;
             }}};
  }
  std::vector<Grouping> out;
  for (GroupLabel target : {GroupLabel::kFarRight, GroupLabel::kAntivax}) {
    const std::string t(corpus::ToString(target));
    out.push_back({"group_normal_vs_" + t, "normal", t, false,
                   [target](const Document& d) -> std::optional<int> {
                     if (d.kind != DocumentKind::kPost || !d.group_label) {
                       return std::nullopt;
                     }
                     if (*d.group_label == GroupLabel::kNormal) return 0;
                     if (*d.group_label == target) return 1;
                     return std::nullopt;
                   }});
  }
  return out;
}

struct TopicResult {
  std::string topic;
  stats::ComparisonReport report;
};

std::string Cell(const stats::ComparisonRow& r, bool a, bool sd) {
  const stats::GroupSummary& g = a ? r.a : r.b;
  return Fixed2(sd ? g.sd : g.mean);
}

// Topics as column pairs (A, B), significant features as μ/σ/effect rows.
std::string TopicColumnsMarkdown(const Grouping& g,
                                 const std::vector<TopicResult>& results) {
  std::string md = "| Feature | |";
  std::string rule = "|---|---|";
  for (const TopicResult& t : results) {
    md += " " + t.topic + ": " + g.label_a + " | " + t.topic + ": " +
          g.label_b + " |";
    rule += "---:|---:|";
  }
  md += "\n" + rule + "\n| | Num documents |";
  for (const TopicResult& t : results) {
    const auto& rows = t.report.rows;
    const std::size_t na = rows.empty() ? 0 : rows[0].a.n;
    const std::size_t nb = rows.empty() ? 0 : rows[0].b.n;
    md += " " + std::to_string(na) + " | " + std::to_string(nb) + " |";
  }
  md += "\n";

  // Features significant in any topic, by largest |d| across topics.
  std::map<std::string, double> strength;
  for (const TopicResult& t : results) {
    for (const stats::ComparisonRow& r : t.report.rows) {
      if (r.significant && r.d) {
        double& s = strength[r.feature];
        s = std::max(s, std::abs(*r.d));
      }
    }
  }
  std::vector<std::pair<std::string, double>> order(strength.begin(),
                                                    strength.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.second > y.second;
  });
  if (order.empty()) {
    md += "| (no significant features) | |";
    for (std::size_t i = 0; i < results.size(); ++i) md += " | |";
    return md + "\n";
  }
  for (const auto& [feature, unused] : order) {
    std::string mu = "| " + feature + " | μ |";
    std::string sigma = "| | σ |";
    std::string effect = "| | Effect size |";
    for (const TopicResult& t : results) {
      const stats::ComparisonRow* row = nullptr;
      for (const stats::ComparisonRow& r : t.report.rows) {
        if (r.feature == feature && r.significant) row = &r;
      }
      if (!row) {
        mu += " | |";
        sigma += " | |";
        effect += " | |";
        continue;
      }
      mu += " " + Cell(*row, true, false) + " | " + Cell(*row, false, false) +
            " |";
      sigma += " " + Cell(*row, true, true) + " | " + Cell(*row, false, true) +
               " |";
      const std::string d = Fixed2(std::abs(*row->d));
      const bool large = stats::EffectBand(std::abs(*row->d)) == "large";
      effect += " " + (large ? "**" + d + "**" : d) + " | |";
    }
    md += mu + "\n" + sigma + "\n" + effect + "\n";
  }
  return md;
}

// Features as column triples (μ, σ, d); one row per topic and group.
// Values that are not significant are italic.
std::string FeatureColumnsMarkdown(const Grouping& g,
                                   const std::vector<TopicResult>& results,
                                   std::size_t max_features) {
  std::map<std::string, double> strength;
  for (const TopicResult& t : results) {
    for (const stats::ComparisonRow& r : t.report.rows) {
      if (r.significant && r.d) {
        double& s = strength[r.feature];
        s = std::max(s, std::abs(*r.d));
      }
    }
  }
  std::vector<std::pair<std::string, double>> order(strength.begin(),
                                                    strength.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.second > y.second;
  });
  if (order.size() > max_features) order.resize(max_features);
  if (order.empty()) return "(no significant features)\n";

  std::string md = "| Topic | Group | N |";
  std::string rule = "|---|---|---:|";
  for (const auto& [feature, unused] : order) {
    md += " " + feature + " μ | " + feature + " σ | " + feature + " d |";
    rule += "---:|---:|---:|";
  }
  md += "\n" + rule + "\n";
  for (const TopicResult& t : results) {
    for (int side : {1, 0}) {
      const bool a = side == 0;
      const auto& rows = t.report.rows;
      const std::size_t n = rows.empty() ? 0 : (a ? rows[0].a.n : rows[0].b.n);
      md += "| " + (a ? std::string() : t.topic) + " | " +
            (a ? g.label_a : g.label_b) + " | " + std::to_string(n) + " |";
      for (const auto& [feature, unused] : order) {
        const stats::ComparisonRow* row = nullptr;
        for (const stats::ComparisonRow& r : rows) {
          if (r.feature == feature) row = &r;
        }
        if (!row) {
          md += " | | |";
          continue;
        }
        auto fmt = [&](const std::string& v) {
          return row->significant ? v : "_" + v + "_";
        };
        md += " " + fmt(Cell(*row, a, false)) + " | " +
              fmt(Cell(*row, a, true)) + " | ";
        md += a && row->d ? fmt(Fixed2(std::abs(*row->d))) : "";
        md += " |";
      }
      md += "\n";
    }
  }
  return md;
}

void Compare(const RunConfig& c, StageRun& run, Streams io) {
  const DocumentSet docs = LoadIngested(run);
  RequireStage(run.out(), "features");
  const CompareSettings& s = c.compare;
  const FeatureTable table = LoadFamily(run, s.family);
  run.Lap("load");

  std::size_t reports = 0;
  for (const std::string& by : s.by) {
    CsvWriter all;
    bool header = false;
    std::string summary;
    for (const Grouping& g : Groupings(by)) {
      std::vector<TopicResult> results;
      const std::vector<std::string> topics =
          g.by_topic ? s.topics : std::vector<std::string>{"all"};
      for (const std::string& topic : topics) {
        std::vector<std::size_t> rows[2];
        for (std::size_t r = 0; r < table.rows(); ++r) {
          const Document* d = docs.Find(table.ids()[r]);
          if (!d) continue;
          if (topic != "all" && d->topic != topic) continue;
          if (auto side = g.side(*d)) rows[*side].push_back(r);
        }
        for (int side = 0; side < 2; ++side) {
          if (rows[side].size() < 2) {
            throw InputError(
                "compare: group '" + (side ? g.label_b : g.label_a) +
                "' of comparison '" + by + "' has " +
                std::to_string(rows[side].size()) + " documents for topic '" +
                topic + "'; at least 2 are needed");
          }
        }
        stats::ComparisonReport report =
            stats::CompareGroups(table.SelectRows(rows[0]),
                                 table.SelectRows(rows[1]), s.options);
        report.label_a = g.label_a;
        report.label_b = g.label_b;
        const std::string stem = "compare/" + g.name + "/" + Slug(topic);
        run.Write(stem + ".csv", report.ToCsv());
        run.Write(stem + ".md", report.ToMarkdown(false));
        run.Write(stem + "_significant.md", report.ToMarkdown(true));
        ++reports;

        // Long form across topics: the per-topic CSV with two leading keys.
        const std::vector<CsvRow> parsed = ParseCsv(report.ToCsv());
        for (std::size_t i = 0; i < parsed.size(); ++i) {
          if (i == 0 && header) continue;
          std::vector<std::string> cells = {i == 0 ? "comparison" : g.name,
                                            i == 0 ? "topic" : topic};
          cells.insert(cells.end(), parsed[i].cells.begin(),
                       parsed[i].cells.end());
          all.AddRow(cells);
        }
        header = true;
        io.log << "compare: " << g.name << " / " << topic << ": "
               << report.SignificantCount() << " of " << report.rows.size()
               << " features significant at p < "
               << FormatDouble(report.threshold) << "\n";
        results.push_back({topic, std::move(report)});
      }
      summary += "#### " + g.label_a + " vs " + g.label_b + "\n\n";
      summary += by == "origin" ? FeatureColumnsMarkdown(g, results, 5)
                                : TopicColumnsMarkdown(g, results);
      summary += "\n";
    }
    run.Write("compare/" + by + ".csv", all.str());
    run.Write("compare/" + by + ".md", summary);
  }
  run.Lap("compare");
  if (reports == 0) io.warn << "warning: no comparisons configured\n";
}

// -------------------------------------------------------------- classify

// Labelled documents for one classification problem.
struct Problem {
  std::string task;
  std::string subset;  // style name for "styles", empty otherwise
  std::map<std::string, std::string> labels;  // id -> class
  std::size_t per_class = 0;  // 0: smallest class
  std::size_t folds = 2;
  std::uint64_t balance_seed = 0;
  learn::Hyperparams params;
};

[[noreturn]] void MissingLabels(const std::string& task,
                                const std::string& what) {
  throw InputError("task '" + task + "' cannot run: " + what);
}

std::vector<Problem> GroupsProblem(const DocumentSet& docs,
                                   const ClassifySettings& s,
                                   std::uint64_t seed) {
  Problem p{"groups", "", {}, s.groups_per_class, s.groups_folds,
            DeriveSeed(seed, 1), s.params};
  std::set<std::string> present;
  for (const Document& d : docs) {
    if (d.kind != DocumentKind::kPost || !d.group_label) continue;
    const std::string label(corpus::ToString(*d.group_label));
    p.labels[d.id] = label;
    present.insert(label);
  }
  if (present.empty()) {
    MissingLabels("groups", "absent label field: group_label (no post has it)");
  }
  std::string absent;
  for (const char* need : {"far_right", "antivax", "normal"}) {
    if (!present.contains(need)) absent += (absent.empty() ? "" : ", ") +
                                           std::string(need);
  }
  if (!absent.empty()) {
    MissingLabels("groups", "no post has group_label " + absent);
  }
  return {p};
}

std::vector<Problem> StylesProblems(const DocumentSet& docs,
                                    const ClassifySettings& s,
                                    std::uint64_t seed) {
  std::map<std::string, std::vector<std::string>> by_style;
  for (const Document& d : docs) {
    if (d.kind == DocumentKind::kPost && d.style_label) {
      by_style[std::string(corpus::ToString(*d.style_label))].push_back(d.id);
    }
  }
  if (by_style.empty()) {
    MissingLabels("styles", "absent label field: style_label (no post has it)");
  }
  std::vector<Problem> out;
  for (const std::string& style : s.styles) {
    auto it = by_style.find(style);
    if (it == by_style.end()) {
      MissingLabels("styles", "no post has style_label " + style);
    }
    const auto parsed = corpus::ParseStyleLabel(style);
    Problem p{"styles", style, {}, 0, s.styles_folds,
              DeriveSeed(seed, 16 + static_cast<std::uint64_t>(*parsed)),
              s.styles_params};
    for (const auto& [name, ids] : by_style) {
      for (const std::string& id : ids) {
        p.labels[id] = name == style ? style : "other";
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Problem> ProdConsProblem(const DocumentSet& docs,
                                     const ClassifySettings& s,
                                     std::uint64_t seed) {
  Problem p{"prodcons", "", {}, s.prodcons_per_class, s.prodcons_folds,
            DeriveSeed(seed, 2), s.params};
  std::map<std::string, std::size_t> counts;
  bool any_leaning = false;
  for (const Document& d : docs) {
    if (d.kind != DocumentKind::kArticle) continue;
    std::string label;
    if (d.origin == corpus::Origin::kShared) {
      label = "consumption";
    } else if (d.leaning) {
      any_leaning = true;
      label = d.leaning->far_right ? "fr_production" : "md_production";
    } else {
      continue;
    }
    p.labels[d.id] = label;
    ++counts[label];
  }
  if (!any_leaning) {
    MissingLabels("prodcons",
                  "absent label field: leaning (no produced article has a "
                  "publisher rating; set input.publishers)");
  }
  std::string absent;
  for (const char* need : {"consumption", "fr_production", "md_production"}) {
    if (!counts.contains(need)) {
      absent += (absent.empty() ? "" : ", ") + std::string(need);
    }
  }
  if (!absent.empty()) MissingLabels("prodcons", "no articles for " + absent);
  return {p};
}

learn::FeatureFamily FamilyKind(const std::string& family) {
  if (family == "lgs") return learn::FeatureFamily::kLgs;
  if (family == "embedding") return learn::FeatureFamily::kEmbedding;
  return learn::FeatureFamily::kOther;
}

// Rows of `table` whose ids appear in `ids`, in the order of `ids`.
FeatureTable RowsById(const FeatureTable& table,
                      const std::vector<std::string>& ids) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t r = 0; r < table.rows(); ++r) index[table.ids()[r]] = r;
  std::vector<std::size_t> rows;
  rows.reserve(ids.size());
  for (const std::string& id : ids) rows.push_back(index.at(id));
  return table.SelectRows(rows);
}

struct ResultRow {
  std::string subset;
  std::string family;
  learn::ModelKind model;
  learn::EvalReport report;
};

// groups: classifiers as rows, families as columns.
std::string GroupsMarkdown(const std::vector<ResultRow>& results,
                           const ClassifySettings& s) {
  std::string md = "| Classifier | Metric |";
  std::string rule = "|---|---|";
  for (const std::string& f : s.families) {
    md += " " + FamilyTitle(f) + " |";
    rule += "---:|";
  }
  md += "\n" + rule + "\n";
  for (learn::ModelKind m : s.models) {
    for (int metric = 0; metric < 2; ++metric) {
      md += "| " + (metric == 0 ? ModelTitle(m) : std::string()) + " | " +
            (metric == 0 ? "accuracy" : "macro F1") + " |";
      for (const std::string& f : s.families) {
        for (const ResultRow& r : results) {
          if (r.family == f && r.model == m) {
            md += " " + Fixed2(metric == 0 ? r.report.accuracy
                                           : r.report.macro_f1) + " |";
          }
        }
      }
      md += "\n";
    }
  }
  return md;
}

// styles and prodcons: (row key, classifier) rows, family column pairs.
// Styles show macro F1 and accuracy; prodcons shows each class's F1 and
// recall.
std::string KeyedMarkdown(const std::vector<ResultRow>& results,
                          const ClassifySettings& s,
                          const std::vector<std::string>& keys,
                          bool per_class) {
  const std::string key_title = per_class ? "Class" : "Style";
  const std::string m1 = per_class ? "F1" : "macro F1";
  const std::string m2 = per_class ? "recall" : "accuracy";
  std::string md = "| " + key_title + " | Classifier |";
  std::string rule = "|---|---|";
  for (const std::string& f : s.families) {
    md += " " + FamilyTitle(f) + " " + m1 + " | " + FamilyTitle(f) + " " +
          m2 + " |";
    rule += "---:|---:|";
  }
  md += "\n" + rule + "\n";
  for (const std::string& key : keys) {
    bool first = true;
    for (learn::ModelKind m : s.models) {
      md += "| " + (first ? key : std::string()) + " | " + ModelTitle(m) +
            " |";
      first = false;
      for (const std::string& f : s.families) {
        for (const ResultRow& r : results) {
          if (r.family != f || r.model != m) continue;
          if (per_class) {
            const auto& cls = r.report.classes;
            const auto c = static_cast<std::size_t>(
                std::find(cls.begin(), cls.end(), key) - cls.begin());
            md += " " + Fixed2(r.report.f1[c]) + " | " +
                  Fixed2(r.report.recall[c]) + " |";
          } else if (r.subset == key) {
            md += " " + Fixed2(r.report.macro_f1) + " | " +
                  Fixed2(r.report.accuracy) + " |";
          }
        }
      }
      md += "\n";
    }
  }
  return md;
}

void Classify(const RunConfig& c, StageRun& run, Streams io) {
  const std::uint64_t seed = c.RequireSeed("classify");
  const DocumentSet docs = LoadIngested(run);
  const ClassifySettings& s = c.classify;

  std::map<std::string, FeatureTable> tables;
  bool features_checked = false;
  for (const std::string& f : s.families) {
    if (f == "embedding") {
      if (c.input.embeddings.empty()) {
        throw InputError("classify.features lists 'embedding' but "
                         "input.embeddings is not set");
      }
      run.AddInput(c.input.embeddings);
      tables[f] = learn::LoadEmbeddings(c.input.embeddings, docs);
    } else {
      if (!features_checked) RequireStage(run.out(), "features");
      features_checked = true;
      tables[f] = LoadFamily(run, f);
    }
  }
  std::map<std::string, std::unordered_set<std::string>> table_ids;
  for (const auto& [f, t] : tables) {
    table_ids[f].insert(t.ids().begin(), t.ids().end());
  }
  run.Lap("load");

  for (const std::string& task : s.tasks) {
    std::vector<Problem> problems =
        task == "groups" ? GroupsProblem(docs, s, seed)
        : task == "styles" ? StylesProblems(docs, s, seed)
                           : ProdConsProblem(docs, s, seed);
    std::vector<ResultRow> results;
    CsvWriter summary;
    summary.AddRow({"task", "subset", "family", "model", "rows", "folds",
                    "accuracy", "accuracy_sd", "macro_f1", "macro_f1_sd"});
    std::vector<std::string> keys;
    for (Problem& p : problems) {
      // Documents with a row in every family, in id order.
      std::vector<std::string> ids;
      std::vector<std::string> labels;
      for (const auto& [id, label] : p.labels) {
        bool everywhere = true;
        for (const auto& [f, present] : table_ids) {
          everywhere = everywhere && present.contains(id);
        }
        if (everywhere) {
          ids.push_back(id);
          labels.push_back(label);
        }
      }
      // Balance once on labels alone so every family sees the same rows.
      FeatureTable id_only(std::vector<std::string>{"_"});
      const double zero = 0;
      for (const std::string& id : ids) id_only.AddRow(id, {&zero, 1});
      const learn::Dataset labelled =
          learn::MakeDataset(id_only, labels, learn::FeatureFamily::kOther);
      std::size_t n = p.per_class;
      if (n == 0) {
        const auto counts = labelled.ClassCounts();
        n = *std::min_element(counts.begin(), counts.end());
      }
      const learn::Dataset balanced =
          learn::BalanceClasses(labelled, n, p.balance_seed);
      std::vector<std::string> chosen_labels;
      for (int y : balanced.y) chosen_labels.push_back(balanced.classes[y]);

      const std::string prefix =
          "classify/" + task + "/" + (p.subset.empty() ? "" : p.subset + "_");
      for (const std::string& f : s.families) {
        const learn::Dataset data = learn::MakeDataset(
            RowsById(tables.at(f), balanced.x.ids()), chosen_labels,
            FamilyKind(f));
        for (learn::ModelKind m : s.models) {
          const std::string stem =
              prefix + f + "_" + std::string(learn::ToString(m));
          learn::EvalReport report = learn::CrossValidate(
              m, data, p.folds, p.params, seed, c.workers);
          run.Write(stem + ".json", report.ToJson());
          std::string title = ModelTitle(m) + " on " + FamilyTitle(f) +
                              " features, task " + task;
          if (!p.subset.empty()) title += " (" + p.subset + ")";
          run.Write(stem + ".md", report.ToMarkdown(title));
          run.Write(stem + "_confusion.csv", report.ConfusionCsv());
          const learn::TrainedModel model =
              learn::Train(m, data, p.params, seed, c.workers);
          run.Write(stem + "_model.json", model.ToJson());
          if (m == learn::ModelKind::kForest) {
            CsvWriter imp;
            imp.AddRow({"feature", "importance"});
            for (const auto& [name, v] : learn::FeatureImportance(model)) {
              imp.AddRow({name, FormatDouble(v)});
            }
            run.Write(stem + "_importance.csv", imp.str());
          }
          summary.AddRow({task, p.subset, f, std::string(learn::ToString(m)),
                          std::to_string(data.rows()),
                          std::to_string(report.folds),
                          FormatDouble(report.accuracy),
                          FormatDouble(report.accuracy_sd),
                          FormatDouble(report.macro_f1),
                          FormatDouble(report.macro_f1_sd)});
          io.log << "classify: " << task
                 << (p.subset.empty() ? "" : "/" + p.subset) << " " << f
                 << " " << learn::ToString(m) << ": accuracy "
                 << FormatFixed(report.accuracy, 3) << ", macro-F1 "
                 << FormatFixed(report.macro_f1, 3) << " (" << report.folds
                 << "-fold, " << data.rows() << " rows)\n";
          results.push_back({p.subset, f, m, std::move(report)});
        }
      }
      if (task == "styles") keys.push_back(p.subset);
      if (task == "prodcons") keys = balanced.classes;
    }
    std::string md;
    if (task == "groups") md = GroupsMarkdown(results, s);
    if (task == "styles") md = KeyedMarkdown(results, s, keys, false);
    if (task == "prodcons") md = KeyedMarkdown(results, s, keys, true);
    run.Write("classify/" + task + ".md", md);
    run.Write("classify/" + task + ".csv", summary.str());
    run.Lap(task);
  }
}

// ---------------------------------------------------------------- report

std::vector<std::string> OutputPaths(const nlohmann::json& manifest) {
  std::vector<std::string> out;
  for (const auto& o : manifest.at("outputs")) {
    out.push_back(o.at("path").get<std::string>());
  }
  return out;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::string Upstream(StageRun& run, const std::string& rel) {
  run.AddUpstream(rel);
  return ReadFile(run.out() / rel);
}

std::vector<EffectBar> TopEffects(const std::string& csv, std::size_t limit) {
  const std::vector<CsvRow> rows = ParseCsv(csv);
  if (rows.empty()) return {};
  const auto& head = rows[0].cells;
  auto col = [&](const char* name) {
    return static_cast<std::size_t>(
        std::find(head.begin(), head.end(), name) - head.begin());
  };
  const std::size_t feature = col("feature"), d = col("d"),
                    sig = col("significant");
  std::vector<EffectBar> bars;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& cells = rows[i].cells;
    if (cells[d].empty()) continue;
    bars.push_back({cells[feature], std::stod(cells[d]),
                    cells[sig] == "true"});
  }
  std::stable_sort(bars.begin(), bars.end(),
                   [](const EffectBar& a, const EffectBar& b) {
                     return std::abs(a.d) > std::abs(b.d);
                   });
  if (bars.size() > limit) bars.resize(limit);
  return bars;
}

void Report(const RunConfig& c, StageRun& run, Streams io) {
  std::map<std::string, nlohmann::json> manifests;
  for (const char* stage :
       {"ingest", "features", "trust", "compare", "classify"}) {
    manifests[stage] = RequireStage(run.out(), stage);
  }
  run.Lap("check");

  std::string md = "# Stylolab report\n\n";
  md += "Toolkit version " + std::string(STYLOLAB_VERSION_STRING);
  if (c.seed) md += ", seed " + std::to_string(*c.seed);
  md += ".\n\n";

  md += "## Corpus coverage\n\nProduced articles by topic and leaning.\n\n";
  md += Upstream(run, "ingest/coverage.md") + "\n";

  md += "## Trust index\n\n";
  md += Upstream(run, "trust/trust_table.md") + "\n";

  md += "## Style comparisons\n\n";
  const auto compare_files = OutputPaths(manifests["compare"]);
  for (const std::string& rel : compare_files) {
    // Summaries sit directly under compare/.
    if (!EndsWith(rel, ".md") ||
        rel.find('/', std::string("compare/").size()) != std::string::npos) {
      continue;
    }
    const std::string by = rel.substr(8, rel.size() - 8 - 3);
    md += "### Comparison by " + by + "\n\n" + Upstream(run, rel) + "\n";
  }
  md += "### Effect sizes\n\n";
  for (const std::string& rel : compare_files) {
    const std::size_t slash = rel.find('/', 8);
    if (slash == std::string::npos || !EndsWith(rel, ".csv")) continue;
    const std::string name = rel.substr(8, slash - 8);
    const std::string topic = rel.substr(slash + 1, rel.size() - slash - 5);
    const std::string file = "effects_" + name + "_" + topic + ".svg";
    run.Write("report/" + file,
              EffectSizeChart(name + " / " + topic,
                              TopEffects(Upstream(run, rel), 15)));
    md += "![" + name + " / " + topic + "](" + file + ")\n\n";
  }

  md += "## Classification\n\n";
  const auto classify_files = OutputPaths(manifests["classify"]);
  for (const std::string& rel : classify_files) {
    if (!EndsWith(rel, ".md") ||
        rel.find('/', std::string("classify/").size()) != std::string::npos) {
      continue;
    }
    const std::string task = rel.substr(9, rel.size() - 9 - 3);
    md += "### Task " + task + "\n\n" + Upstream(run, rel) + "\n";
  }
  md += "### Confusion matrices\n\n";
  for (const std::string& rel : classify_files) {
    const std::size_t slash = rel.find('/', 9);
    if (slash == std::string::npos || !EndsWith(rel, ".json") ||
        EndsWith(rel, "_model.json")) {
      continue;
    }
    const nlohmann::json j = nlohmann::json::parse(Upstream(run, rel));
    const std::string task = rel.substr(9, slash - 9);
    const std::string stem = rel.substr(slash + 1, rel.size() - slash - 6);
    const std::string file = "confusion_" + task + "_" + stem + ".svg";
    run.Write("report/" + file,
              ConfusionHeatmap(task + ": " + stem,
                               j.at("classes").get<std::vector<std::string>>(),
                               j.at("confusion")
                                   .get<std::vector<std::vector<std::size_t>>>()));
    md += "![" + task + ": " + stem + "](" + file + ")\n\n";
  }
  md += "### Most important features (random forest)\n\n";
  for (const std::string& rel : classify_files) {
    if (!EndsWith(rel, "_importance.csv")) continue;
    const std::vector<CsvRow> rows = ParseCsv(Upstream(run, rel));
    md += "**" + rel.substr(9, rel.size() - 9 - 15) + "**\n\n";
    md += "| Rank | Feature | Importance |\n|---:|---|---:|\n";
    for (std::size_t i = 1; i < rows.size() && i <= 10; ++i) {
      md += "| " + std::to_string(i) + " | " + rows[i].cells[0] + " | " +
            FormatFixed(std::stod(rows[i].cells[1]), 4) + " |\n";
    }
    md += "\n";
  }
  run.Write("report/report.md", md);
  run.Lap("render");
  io.log << "report: " << (run.out() / "report" / "report.md").string()
         << "\n";
}

}  // namespace

void CmdIngest(const RunConfig& config, const OutputDir& dir, Streams io) {
  StageRun run(dir, "ingest", config);
  Ingest(config, run, io);
  run.Finish();
}

void CmdFeatures(const RunConfig& config, const OutputDir& dir, Streams io) {
  StageRun run(dir, "features", config);
  Features(config, run, io);
  run.Finish();
}

void CmdTrust(const RunConfig& config, const OutputDir& dir, Streams io) {
  StageRun run(dir, "trust", config);
  Trust(config, run, io);
  run.Finish();
}

void CmdCompare(const RunConfig& config, const OutputDir& dir, Streams io) {
  StageRun run(dir, "compare", config);
  Compare(config, run, io);
  run.Finish();
}

void CmdClassify(const RunConfig& config, const OutputDir& dir, Streams io) {
  StageRun run(dir, "classify", config);
  Classify(config, run, io);
  run.Finish();
}

void CmdReport(const RunConfig& config, const OutputDir& dir, Streams io) {
  StageRun run(dir, "report", config);
  Report(config, run, io);
  run.Finish();
}

const std::vector<std::string>& CommandNames() {
  static const std::vector<std::string> names = {
      "ingest", "features", "trust", "compare", "classify", "report"};
  return names;
}

void RunCommand(const std::string& name, const RunConfig& config,
                const OutputDir& dir, Streams io) {
  using Fn = void (*)(const RunConfig&, const OutputDir&, Streams);
  static const std::map<std::string, Fn> table = {
      {"ingest", CmdIngest},   {"features", CmdFeatures},
      {"trust", CmdTrust},     {"compare", CmdCompare},
      {"classify", CmdClassify}, {"report", CmdReport}};
  if (name == "pipeline") {
    config.RequireSeed("pipeline");
    for (const std::string& n : CommandNames()) table.at(n)(config, dir, io);
    return;
  }
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown command '" + name + "'");
  it->second(config, dir, io);
}

}  // namespace stylolab::cli
