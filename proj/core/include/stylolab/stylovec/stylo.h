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


#ifndef STYLOLAB_STYLOVEC_STYLO_H_
#define STYLOLAB_STYLOVEC_STYLO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "stylolab/common/feature_vector.h"
#include "stylolab/textproc/analyzed_text.h"

namespace stylolab::stylovec {

inline constexpr std::string_view kSchemaVersion = "v1";
inline constexpr double kSentenceLengthCap = 100.0;  // tokens
inline constexpr double kWordLengthCap = 20.0;       // letters

// Metric names of the current schema, in output order.
const std::vector<std::string>& MetricNames();

// {"schema_version": "v1", "metrics": [...]} for the current schema.
std::string SchemaJson();

struct WordClass {
  std::string name;  // e.g. "pron_1sg"
  std::unordered_set<std::string> words;
};

// The closed-class lists the schema expects, in schema order.
const std::vector<std::string>& ClosedClassNames();

// Shipped lists.
std::vector<WordClass> DefaultClosedClasses();

// Reads <dir>/<name>.txt for every name in ClosedClassNames(). Throws
// InputError when a file is missing.
std::vector<WordClass> LoadClosedClasses(const std::filesystem::path& dir);

struct StyloVector {
  std::string doc_id;
  std::string schema_version{kSchemaVersion};
  std::vector<double> values;  // parallel to MetricNames()

  FeatureVector ToFeatureVector() const;
};

// Pure and immutable after construction; safe to share across workers.
class StyloExtractor {
 public:
  StyloExtractor() : StyloExtractor(DefaultClosedClasses()) {}
  // Throws InputError unless `classes` matches ClosedClassNames() in order.
  explicit StyloExtractor(std::vector<WordClass> classes);

  // Every value lies in [0, 1]. Throws DegenerateError when the text has no
  // word token.
  StyloVector Extract(std::string doc_id,
                      const textproc::AnalyzedText& doc) const;

 private:
  std::vector<WordClass> classes_;
};

// liwc.*, grievance.*, stylo.* in that order. Throws InputError when the
// document ids differ or a family is empty or mislabeled.
FeatureVector ConcatLgs(const FeatureVector& liwc,
                        const FeatureVector& grievance,
                        const StyloVector& stylo);

// Same as above with the three families given in any order and identified by
// their `family` field ("liwc", "grievance", "stylo"). A missing or repeated
// family is an InputError.
FeatureVector ConcatLgs(std::span<const FeatureVector> parts);

}  // namespace stylolab::stylovec

#endif  // STYLOLAB_STYLOVEC_STYLO_H_
