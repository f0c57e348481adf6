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


#include "stylolab/lexicon/features.h"

#include <algorithm>

#include "json.hpp"

#include "stylolab/common/error.h"
#include "stylolab/common/resources.h"
#include "stylolab/common/utf8.h"

namespace stylolab::lexicon {
namespace {

using textproc::TokenKind;

constexpr std::size_t kBigWordLetters = 7;

double Percent(std::size_t count, std::size_t wc) {
  return wc == 0 ? 0.0
                 : 100.0 * static_cast<double>(count) / static_cast<double>(wc);
}

nlohmann::json ParseJson(std::string_view text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

const std::vector<std::string>& SummaryFeatureNames() {
  static const std::vector<std::string> kNames = {
      "WC",     "WPS",   "BigWords", "AllPunc", "Period",
      "Comma",  "QMark", "Exclam",   "Apostro", "OtherP"};
  return kNames;
}

FeatureVector ExtractDictFeatures(const textproc::TokenStream& doc,
                                  const Lexicon& lexicon,
                                  const Matcher& matcher) {
  const std::size_t wc = doc.wc();
  if (wc == 0) {
    throw DegenerateError("dictionary features need at least one word");
  }
  const std::size_t k = lexicon.categories().size();
  std::vector<std::size_t> counts(k, 0);
  std::size_t dic = 0;
  CategoryMask mask(k);
  for (const textproc::Token& t : doc.tokens) {
    if (t.kind != TokenKind::kWord) continue;
    if (!matcher.Lookup(t.norm, mask)) continue;
    ++dic;
    mask.ForEach([&](std::size_t i) { ++counts[i]; });
  }
  FeatureVector out;
  out.word_count = wc;
  out.names.reserve(k + 1);
  out.values.reserve(k + 1);
  out.Add("Dic", Percent(dic, wc));
  for (std::size_t i = 0; i < k; ++i) {
    out.Add(lexicon.categories()[i].name, Percent(counts[i], wc));
  }
  return out;
}

FeatureVector ExtractSummaryFeatures(const textproc::AnalyzedText& doc) {
  const std::string_view text = doc.text;
  const std::size_t wc = doc.tokens.wc();
  std::size_t big = 0, punct = 0, period = 0, comma = 0, qmark = 0,
              exclam = 0, apostro = 0, inner_apostro = 0;
  for (const textproc::Token& t : doc.tokens.tokens) {
    if (t.kind == TokenKind::kNumber) continue;
    std::string_view s = t.Surface(text);
    if (t.kind == TokenKind::kWord) {
      std::size_t letters = 0;
      for (std::size_t p = 0; p < s.size();) {
        char32_t cp = utf8::Next(s, p);
        if (utf8::IsApostrophe(cp)) {
          ++inner_apostro;
        } else {
          ++letters;
        }
      }
      if (letters >= kBigWordLetters) ++big;
      continue;
    }
    ++punct;
    std::size_t p = 0;
    char32_t cp = utf8::Next(s, p);
    if (cp == '.') {
      ++period;
    } else if (cp == ',') {
      ++comma;
    } else if (cp == '?') {
      ++qmark;
    } else if (cp == '!') {
      ++exclam;
    } else if (utf8::IsApostrophe(cp)) {
      ++apostro;
    }
  }
  const std::size_t other = punct - period - comma - qmark - exclam - apostro;
  apostro += inner_apostro;
  punct += inner_apostro;

  FeatureVector out;
  out.family = "summary";
  out.word_count = wc;
  const std::size_t sentences = doc.sentences.size();
  out.Add("WC", static_cast<double>(wc));
  out.Add("WPS", sentences == 0 ? 0.0
                                : static_cast<double>(wc) /
                                      static_cast<double>(sentences));
  out.Add("BigWords", Percent(big, wc));
  out.Add("AllPunc", Percent(punct, wc));
  out.Add("Period", Percent(period, wc));
  out.Add("Comma", Percent(comma, wc));
  out.Add("QMark", Percent(qmark, wc));
  out.Add("Exclam", Percent(exclam, wc));
  out.Add("Apostro", Percent(apostro, wc));
  out.Add("OtherP", Percent(other, wc));
  return out;
}

FeatureVector FilterStyleCategories(const FeatureVector& features,
                                    const std::set<std::string>& blocklist,
                                    std::vector<std::string>* warnings) {
  FeatureVector out;
  out.doc_id = features.doc_id;
  out.family = features.family;
  out.word_count = features.word_count;
  for (std::size_t i = 0; i < features.names.size(); ++i) {
    if (!blocklist.contains(features.names[i])) {
      out.Add(features.names[i], features.values[i]);
    }
  }
  if (warnings != nullptr) {
    for (const std::string& name : blocklist) {
      if (!features.Find(name)) {
        warnings->push_back("blocklist entry '" + name +
                            "' is not a feature and was ignored");
      }
    }
  }
  return out;
}

std::vector<Composite> ParseComposites(std::string_view json) {
  nlohmann::json doc = ParseJson(json, "composites file");
  if (!doc.is_object() || !doc.contains("composites") ||
      !doc["composites"].is_array()) {
    throw InputError("composites file needs a \"composites\" array");
  }
  std::vector<Composite> out;
  std::set<std::string> seen;
  try {
    for (const auto& item : doc["composites"]) {
      Composite c;
      c.name = item.at("name").get<std::string>();
      c.intercept = item.value("intercept", 0.0);
      c.min = item.value("min", 0.0);
      c.max = item.value("max", 100.0);
      for (const auto& [category, weight] : item.at("weights").items()) {
        c.weights.emplace_back(category, weight.get<double>());
      }
      if (c.min > c.max) {
        throw InputError("composite '" + c.name + "' has min > max");
      }
      if (!seen.insert(c.name).second) {
        throw InputError("duplicate composite '" + c.name + "'");
      }
      out.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed composites file: ") + e.what());
  }
  return out;
}

std::set<std::string> ParseBlocklist(std::string_view json) {
  nlohmann::json doc = ParseJson(json, "blocklist file");
  if (!doc.is_object() || !doc.contains("blocklist") ||
      !doc["blocklist"].is_array()) {
    throw InputError("blocklist file needs a \"blocklist\" array");
  }
  std::set<std::string> out;
  for (const auto& item : doc["blocklist"]) {
    if (!item.is_string()) throw InputError("blocklist entries must be strings");
    out.insert(item.get<std::string>());
  }
  return out;
}

LiwcConfig LiwcConfig::Default() {
  LiwcConfig config;
  config.lexicon = ParseDic(EmbeddedResource("liwc_open.dic"));
  config.composites = ParseComposites(EmbeddedResource("liwc_composites.json"));
  config.blocklist = ParseBlocklist(EmbeddedResource("liwc_blocklist.json"));
  return config;
}

LiwcExtractor::LiwcExtractor(LiwcConfig config)
    : config_(std::move(config)), matcher_(config_.lexicon) {
  if (config_.composites) {
    for (const Composite& c : *config_.composites) {
      std::vector<std::pair<std::size_t, double>> terms;
      for (const auto& [category, weight] : c.weights) {
        auto idx = config_.lexicon.IndexOfName(category);
        if (!idx) {
          throw InputError("composite '" + c.name +
                           "' references unknown category '" + category + "'");
        }
        terms.emplace_back(*idx, weight);
      }
      composite_terms_.push_back(std::move(terms));
    }
  } else {
    notes_.push_back(
        "no composite coefficients configured; Analytic, Clout, Authentic and "
        "Tone are omitted");
  }

  full_names_ = {"Segment", "WC"};
  if (config_.composites) {
    for (const Composite& c : *config_.composites) full_names_.push_back(c.name);
  }
  for (const char* n : {"WPS", "BigWords", "Dic"}) full_names_.push_back(n);
  for (const Category& c : config_.lexicon.categories()) {
    full_names_.push_back(c.name);
  }
  for (const char* n :
       {"AllPunc", "Period", "Comma", "QMark", "Exclam", "Apostro", "OtherP"}) {
    full_names_.push_back(n);
  }
  {
    std::set<std::string> unique(full_names_.begin(), full_names_.end());
    if (unique.size() != full_names_.size()) {
      throw InputError("category names collide with summary feature names");
    }
  }
  for (std::size_t i = 0; i < full_names_.size(); ++i) {
    if (!config_.blocklist.contains(full_names_[i])) {
      kept_.push_back(i);
      names_.push_back(full_names_[i]);
    }
  }
  for (const std::string& b : config_.blocklist) {
    if (std::find(full_names_.begin(), full_names_.end(), b) ==
        full_names_.end()) {
      notes_.push_back("blocklist entry '" + b +
                       "' is not a feature and was ignored");
    }
  }
}

FeatureVector LiwcExtractor::ExtractFull(
    std::string doc_id, const textproc::AnalyzedText& doc) const {
  FeatureVector dict = ExtractDictFeatures(doc.tokens, config_.lexicon, matcher_);
  FeatureVector summary = ExtractSummaryFeatures(doc);

  FeatureVector out;
  out.doc_id = std::move(doc_id);
  out.family = "liwc";
  out.word_count = dict.word_count;
  out.names = full_names_;
  out.values.reserve(full_names_.size());
  out.values.push_back(1.0);  // Segment
  out.values.push_back(summary.values[0]);  // WC
  if (config_.composites) {
    for (std::size_t c = 0; c < composite_terms_.size(); ++c) {
      const Composite& spec = (*config_.composites)[c];
      double v = spec.intercept;
      for (const auto& [idx, w] : composite_terms_[c]) {
        v += w * dict.values[idx + 1];
      }
      out.values.push_back(std::clamp(v, spec.min, spec.max));
    }
  }
  out.values.push_back(summary.values[1]);  // WPS
  out.values.push_back(summary.values[2]);  // BigWords
  out.values.insert(out.values.end(), dict.values.begin(), dict.values.end());
  out.values.insert(out.values.end(), summary.values.begin() + 3,
                    summary.values.end());
  return out;
}

FeatureVector LiwcExtractor::Extract(std::string doc_id,
                                     const textproc::AnalyzedText& doc) const {
  FeatureVector full = ExtractFull(std::move(doc_id), doc);
  FeatureVector out;
  out.doc_id = std::move(full.doc_id);
  out.family = full.family;
  out.word_count = full.word_count;
  out.names = names_;
  out.values.reserve(kept_.size());
  for (std::size_t i : kept_) out.values.push_back(full.values[i]);
  return out;
}

GrievanceExtractor::GrievanceExtractor(Lexicon lexicon)
    : lexicon_(std::move(lexicon)), matcher_(lexicon_) {
  for (const Category& c : lexicon_.categories()) names_.push_back(c.name);
}

GrievanceExtractor GrievanceExtractor::Default() {
  return GrievanceExtractor(ParseDic(EmbeddedResource("grievance_open.dic")));
}

FeatureVector GrievanceExtractor::Extract(
    std::string doc_id, const textproc::AnalyzedText& doc) const {
  FeatureVector dict = ExtractDictFeatures(doc.tokens, lexicon_, matcher_);
  FeatureVector out;
  out.doc_id = std::move(doc_id);
  out.family = "grievance";
  out.word_count = dict.word_count;
  out.names = names_;
  out.values.assign(dict.values.begin() + 1, dict.values.end());
  return out;
}

}  // namespace stylolab::lexicon
