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


// Batch extraction of the three style families and their concatenation.

#ifndef STYLOLAB_STYLOVEC_LGS_H_
#define STYLOLAB_STYLOVEC_LGS_H_

#include <string>
#include <utility>
#include <vector>

#include "stylolab/common/feature_table.h"
#include "stylolab/corpus/corpus.h"
#include "stylolab/lexicon/features.h"
#include "stylolab/stylovec/stylo.h"

namespace stylolab::stylovec {

struct LgsExtractors {
  lexicon::LiwcExtractor liwc;
  lexicon::GrievanceExtractor grievance;
  StyloExtractor stylo;

  // Shipped lexica, composites, blocklist and closed-class lists.
  static LgsExtractors Default();
};

struct LgsTables {
  FeatureTable liwc;       // unprefixed column names
  FeatureTable grievance;
  FeatureTable stylo;
  FeatureTable lgs;        // liwc.*, grievance.*, stylo.*
  // Documents without a word token, as (id, reason), ascending by id.
  std::vector<std::pair<std::string, std::string>> excluded;
};

// One row per document with at least one word, ascending by id. Documents
// are processed in parallel; the output never depends on `workers`.
LgsTables ExtractLgsTables(const corpus::DocumentSet& docs,
                           const LgsExtractors& extractors, int workers = 1);

}  // namespace stylolab::stylovec

#endif  // STYLOLAB_STYLOVEC_LGS_H_
