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

#include "stylolab/common/resources.h"

#include <algorithm>
#include <utility>

#include "stylolab/common/error.h"

namespace stylolab {
namespace internal {
extern const std::pair<std::string_view, std::string_view>
    kEmbeddedResources[];
extern const int kEmbeddedResourceCount;
}  // namespace internal

std::string_view EmbeddedResource(std::string_view name) {
  for (int i = 0; i < internal::kEmbeddedResourceCount; ++i) {
    if (internal::kEmbeddedResources[i].first == name) {
      return internal::kEmbeddedResources[i].second;
    }
  }
  throw Error("no embedded resource named '" + std::string(name) + "'");
}

std::vector<std::string> EmbeddedResourceNames() {
  std::vector<std::string> names;
  for (int i = 0; i < internal::kEmbeddedResourceCount; ++i) {
    names.emplace_back(internal::kEmbeddedResources[i].first);
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace stylolab
