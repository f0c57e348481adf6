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


// Static SVG charts for the report.

#ifndef STYLOLAB_TOOLS_CLI_SVG_H_
#define STYLOLAB_TOOLS_CLI_SVG_H_

#include <cstddef>
#include <string>
#include <vector>

namespace stylolab::cli {

struct EffectBar {
  std::string label;
  double d = 0;  // signed
  bool significant = false;
};

// Horizontal bars centred on d = 0; significant bars are filled darker.
std::string EffectSizeChart(const std::string& title,
                            const std::vector<EffectBar>& bars);

// Rows are true classes, columns predicted classes; cell shade follows the
// row-normalized value and the cell text shows the count.
std::string ConfusionHeatmap(const std::string& title,
                             const std::vector<std::string>& classes,
                             const std::vector<std::vector<std::size_t>>& counts);

std::string XmlEscape(const std::string& s);

}  // namespace stylolab::cli

#endif  // STYLOLAB_TOOLS_CLI_SVG_H_
