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

#ifndef STYLOLAB_COMMON_RESOURCES_H_
#define STYLOLAB_COMMON_RESOURCES_H_

#include <string>
#include <string_view>
#include <vector>

namespace stylolab {

// Data files from core/data compiled into the library, keyed by their path
// relative to that directory ("liwc_open.dic", "closed_class/modals.txt").
// Throws Error for unknown names.
std::string_view EmbeddedResource(std::string_view name);

std::vector<std::string> EmbeddedResourceNames();

}  // namespace stylolab

#endif  // STYLOLAB_COMMON_RESOURCES_H_
