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


// Output directory ownership and per-command manifests.

#ifndef STYLOLAB_TOOLS_CLI_RUN_H_
#define STYLOLAB_TOOLS_CLI_RUN_H_

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "config.h"
#include "json.hpp"

namespace stylolab::cli {

inline constexpr std::string_view kLockName = ".stylolab.lock";

// Holds an exclusive lock file in the output directory for its lifetime.
class OutputDir {
 public:
  // Creates the directory. Throws InputError when another run holds the lock.
  explicit OutputDir(fs::path root);
  ~OutputDir();
  OutputDir(const OutputDir&) = delete;
  OutputDir& operator=(const OutputDir&) = delete;

  const fs::path& root() const { return root_; }

 private:
  fs::path root_;
  fs::path lock_;
};

// The manifest of a command that ran earlier in the same output directory.
// Throws InputError naming the stage when it is absent, or when one of its
// outputs is missing or no longer matches the recorded hash.
nlohmann::json RequireStage(const fs::path& out, const std::string& stage);

// One command run: writes files under <out>/<command>/ and records
// manifest_<command>.json. Starting a run clears that command's previous
// outputs.
class StageRun {
 public:
  StageRun(const OutputDir& dir, std::string command, const RunConfig& config);

  const fs::path& out() const { return out_; }

  // External file or directory (files hashed in name order).
  void AddInput(const fs::path& path);
  // Output of an earlier stage, relative to the output directory.
  void AddUpstream(const std::string& relative);
  // Writes <out>/<relative> and records its hash.
  void Write(const std::string& relative, std::string_view content);
  void Note(std::string note);
  // Records the time since the previous lap under `name`.
  void Lap(const std::string& name);
  // Writes the manifest.
  void Finish();

 private:
  fs::path out_;
  std::string command_;
  nlohmann::ordered_json manifest_;
  std::chrono::steady_clock::time_point lap_start_;
};

}  // namespace stylolab::cli

#endif  // STYLOLAB_TOOLS_CLI_RUN_H_
