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


#include "stylolab/common/feature_vector.h"

#include "stylolab/common/error.h"

namespace stylolab {

double FeatureVector::Get(std::string_view name) const {
  if (auto v = Find(name)) return *v;
  throw InputError("feature '" + std::string(name) + "' not in " + family +
                   " vector of '" + doc_id + "'");
}

}  // namespace stylolab
