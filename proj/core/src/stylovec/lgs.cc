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


#include "stylolab/stylovec/lgs.h"

#include <algorithm>
#include <optional>

#include "stylolab/common/error.h"
#include "stylolab/common/parallel.h"
#include "stylolab/textproc/analyzed_text.h"

namespace stylolab::stylovec {

LgsExtractors LgsExtractors::Default() {
  return {lexicon::LiwcExtractor(lexicon::LiwcConfig::Default()),
          lexicon::GrievanceExtractor::Default(), StyloExtractor()};
}

LgsTables ExtractLgsTables(const corpus::DocumentSet& docs,
                           const LgsExtractors& ex, int workers) {
  std::vector<const corpus::Document*> order;
  for (const corpus::Document& d : docs) order.push_back(&d);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });

  struct Row {
    FeatureVector liwc, grievance, stylo;
    std::optional<std::string> error;
  };
  std::vector<Row> rows(order.size());
  ParallelFor(order.size(), workers, [&](std::size_t i) {
    const corpus::Document& d = *order[i];
    textproc::AnalyzedText text = textproc::Analyze(d.text);
    try {
      rows[i].liwc = ex.liwc.Extract(d.id, text);
      rows[i].grievance = ex.grievance.Extract(d.id, text);
      rows[i].stylo = ex.stylo.Extract(d.id, text).ToFeatureVector();
    } catch (const DegenerateError& e) {
      rows[i].error = e.what();
    }
  });

  LgsTables out;
  out.liwc = FeatureTable(ex.liwc.names());
  out.grievance = FeatureTable(ex.grievance.names());
  out.stylo = FeatureTable(MetricNames());
  bool lgs_ready = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Row& r = rows[i];
    if (r.error) {
      out.excluded.emplace_back(order[i]->id, *r.error);
      continue;
    }
    FeatureVector lgs = ConcatLgs(std::vector<FeatureVector>{r.liwc, r.grievance, r.stylo});
    if (!lgs_ready) {
      out.lgs = FeatureTable(lgs.names);
      lgs_ready = true;
    }
    out.liwc.AddRow(order[i]->id, r.liwc.values);
    out.grievance.AddRow(order[i]->id, r.grievance.values);
    out.stylo.AddRow(order[i]->id, r.stylo.values);
    out.lgs.AddRow(order[i]->id, lgs.values);
  }
  if (!lgs_ready) {
    std::vector<std::string> names;
    for (const auto& n : ex.liwc.names()) names.push_back("liwc." + n);
    for (const auto& n : ex.grievance.names()) names.push_back("grievance." + n);
    for (const auto& n : MetricNames()) names.push_back("stylo." + n);
    out.lgs = FeatureTable(names);
  }
  return out;
}

}  // namespace stylolab::stylovec
