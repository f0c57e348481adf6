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


// Run configuration: built-in defaults, then a TOML file (or the "config"
// object of a manifest), then command-line overrides. Every key has a fixed
// type; unknown keys are rejected so typos surface as input errors.

#ifndef STYLOLAB_TOOLS_CLI_CONFIG_H_
#define STYLOLAB_TOOLS_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "stylolab/learn/model.h"
#include "stylolab/stats/stats.h"
#include "stylolab/trustindex/trust.h"

namespace stylolab::cli {

namespace fs = std::filesystem;

using ConfigValue = std::variant<std::int64_t, double, bool, std::string,
                                 std::vector<std::string>>;

struct InputPaths {
  fs::path articles;
  fs::path posts;
  fs::path publishers;
  fs::path liwc_lexicon;
  fs::path liwc_composites;
  fs::path liwc_blocklist;
  fs::path grievance_lexicon;
  fs::path closed_classes;  // directory of <class>.txt word lists
  fs::path embeddings;
};

struct CompareSettings {
  stats::CompareOptions options;
  std::string family = "liwc";
  std::vector<std::string> by;
  std::vector<std::string> topics;  // "all" pools every topic
};

struct ClassifySettings {
  std::vector<std::string> tasks;
  std::vector<learn::ModelKind> models;
  std::vector<std::string> families;
  learn::Hyperparams params;
  learn::Hyperparams styles_params;  // forest replaced by the small preset
  std::size_t groups_per_class = 1000;
  std::size_t groups_folds = 5;
  std::vector<std::string> styles;
  std::size_t styles_folds = 2;
  std::size_t prodcons_per_class = 0;  // 0: size of the smallest class
  std::size_t prodcons_folds = 10;
};

struct RunConfig {
  std::optional<std::uint64_t> seed;
  fs::path out;
  int workers = 1;  // resolved: never 0
  InputPaths input;
  trustindex::TrustOptions trust;
  CompareSettings compare;
  ClassifySettings classify;

  // Flat dotted keys with resolved paths; run.out is left out so that the
  // snapshot does not depend on where results were written.
  std::map<std::string, ConfigValue> values;

  // Nested JSON of `values`, keys sorted.
  nlohmann::ordered_json Snapshot() const;
  // Throws InputError when no seed was configured.
  std::uint64_t RequireSeed(const std::string& command) const;
};

// Sources applied in order; `overrides` are (dotted key, raw text) pairs.
// A config path ending in ".json" is read as a manifest. Relative paths
// from a file resolve against its directory; overrides resolve against the
// working directory. Throws InputError on unknown keys, type mismatches,
// bad enum values and referenced files that do not exist.
RunConfig LoadConfig(
    const std::optional<fs::path>& file,
    const std::vector<std::pair<std::string, std::string>>& overrides);

// The dotted keys accepted in files and as --<key> flags, sorted.
std::vector<std::string> ConfigKeys();

}  // namespace stylolab::cli

#endif  // STYLOLAB_TOOLS_CLI_CONFIG_H_
