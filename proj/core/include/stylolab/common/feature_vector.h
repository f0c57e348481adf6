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


#ifndef STYLOLAB_COMMON_FEATURE_VECTOR_H_
#define STYLOLAB_COMMON_FEATURE_VECTOR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stylolab {

// Named values for one document. Order is defined by the producing
// extractor and is part of its output contract.
struct FeatureVector {
  std::string doc_id;
  std::string family;
  std::vector<std::string> names;
  std::vector<double> values;
  std::size_t word_count = 0;  // WC of the source document

  std::size_t size() const { return values.size(); }
  void Add(std::string name, double value) {
    names.push_back(std::move(name));
    values.push_back(value);
  }
  std::optional<double> Find(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return values[i];
    }
    return std::nullopt;
  }
  // Throws InputError when the name is absent.
  double Get(std::string_view name) const;
};

}  // namespace stylolab

#endif  // STYLOLAB_COMMON_FEATURE_VECTOR_H_
