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


#ifndef STYLOLAB_LEXICON_FEATURES_H_
#define STYLOLAB_LEXICON_FEATURES_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylolab/common/feature_vector.h"
#include "stylolab/lexicon/lexicon.h"
#include "stylolab/textproc/analyzed_text.h"

namespace stylolab::lexicon {

// Feature names emitted by ExtractSummaryFeatures, in order.
const std::vector<std::string>& SummaryFeatureNames();

// "Dic" followed by one percentage per category in lexicon order. Only word
// tokens are looked up; every percentage uses WC (words plus numbers) as the
// denominator. Throws DegenerateError when WC is 0.
FeatureVector ExtractDictFeatures(const textproc::TokenStream& doc,
                                  const Lexicon& lexicon,
                                  const Matcher& matcher);

// WC, WPS, BigWords, AllPunc, Period, Comma, QMark, Exclam, Apostro, OtherP.
// Apostrophes inside words count toward Apostro and AllPunc. All zeros for
// an empty text.
FeatureVector ExtractSummaryFeatures(const textproc::AnalyzedText& doc);

// Drops blocklisted names. Blocklist entries not present in `features` are
// appended to `warnings` when it is non-null.
FeatureVector FilterStyleCategories(const FeatureVector& features,
                                    const std::set<std::string>& blocklist,
                                    std::vector<std::string>* warnings = nullptr);

// value = clamp(intercept + sum(weight * category percentage), min, max).
struct Composite {
  std::string name;
  double intercept = 0;
  std::vector<std::pair<std::string, double>> weights;
  double min = 0;
  double max = 100;
};

// {"composites": [{"name", "intercept", "weights": {...}, "min", "max"}]}
std::vector<Composite> ParseComposites(std::string_view json);

// {"blocklist": ["name", ...]}
std::set<std::string> ParseBlocklist(std::string_view json);

struct LiwcConfig {
  Lexicon lexicon;
  // Absent means composites are omitted from the output and reported in
  // LiwcExtractor::notes().
  std::optional<std::vector<Composite>> composites;
  std::set<std::string> blocklist;

  // Shipped open lexicon, composites and blocklist.
  static LiwcConfig Default();
};

// Full inventory order: Segment, WC, Analytic, Clout, Authentic, Tone, WPS,
// BigWords, Dic, dictionary categories, AllPunc, Period, Comma, QMark,
// Exclam, Apostro, OtherP. Composite names follow the configured list.
class LiwcExtractor {
 public:
  // Throws InputError if a composite references an unknown category.
  explicit LiwcExtractor(LiwcConfig config);

  const std::vector<std::string>& full_names() const { return full_names_; }
  const std::vector<std::string>& names() const { return names_; }
  // Absent composites and blocklist entries missing from the inventory.
  const std::vector<std::string>& notes() const { return notes_; }

  FeatureVector ExtractFull(std::string doc_id,
                            const textproc::AnalyzedText& doc) const;
  // The full vector with the blocklist removed.
  FeatureVector Extract(std::string doc_id,
                        const textproc::AnalyzedText& doc) const;

 private:
  LiwcConfig config_;
  Matcher matcher_;
  std::vector<std::vector<std::pair<std::size_t, double>>> composite_terms_;
  std::vector<std::string> full_names_;
  std::vector<std::string> names_;
  std::vector<std::size_t> kept_;  // indices into full_names_
  std::vector<std::string> notes_;
};

// Category percentages only, no Dic.
class GrievanceExtractor {
 public:
  explicit GrievanceExtractor(Lexicon lexicon);
  // The shipped open grievance lexicon.
  static GrievanceExtractor Default();

  const std::vector<std::string>& names() const { return names_; }
  FeatureVector Extract(std::string doc_id,
                        const textproc::AnalyzedText& doc) const;

 private:
  Lexicon lexicon_;
  Matcher matcher_;
  std::vector<std::string> names_;
};

}  // namespace stylolab::lexicon

#endif  // STYLOLAB_LEXICON_FEATURES_H_
