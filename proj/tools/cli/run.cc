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


#include "run.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>

#include "stylolab/common/error.h"
#include "stylolab/common/hash.h"
#include "stylolab/common/io.h"

namespace stylolab::cli {
namespace {

std::string ManifestName(const std::string& command) {
  return "manifest_" + command + ".json";
}

}  // namespace

OutputDir::OutputDir(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) {
    throw InputError("cannot create output directory " + root_.string() +
                     ": " + ec.message());
  }
  lock_ = root_ / std::string(kLockName);
  int fd = ::open(lock_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    if (errno == EEXIST) {
      throw InputError("output directory " + root_.string() +
                       " is locked by another run; remove " + lock_.string() +
                       " if that run is gone");
    }
    throw InputError("cannot create lock file " + lock_.string() + ": " +
                     std::strerror(errno));
  }
  const std::string pid = std::to_string(::getpid()) + "\n";
  [[maybe_unused]] ssize_t n = ::write(fd, pid.data(), pid.size());
  ::close(fd);
}

OutputDir::~OutputDir() {
  std::error_code ec;
  fs::remove(lock_, ec);
}

nlohmann::json RequireStage(const fs::path& out, const std::string& stage) {
  const fs::path path = out / ManifestName(stage);
  if (!fs::exists(path)) {
    throw InputError("missing upstream artifacts: stage '" + stage +
                     "' has not run in " + out.string() + " (run 'stylolab " +
                     stage + "' first)");
  }
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": invalid manifest: " + e.what());
  }
  for (const auto& o : m.value("outputs", nlohmann::json::array())) {
    const std::string rel = o.at("path").get<std::string>();
    const fs::path file = out / rel;
    if (!fs::exists(file)) {
      throw InputError("missing upstream artifacts: stage '" + stage +
                       "' output " + rel + " is gone (rerun 'stylolab " +
                       stage + "')");
    }
    if (Sha256Hex(ReadFile(file)) != o.at("sha256").get<std::string>()) {
      throw InputError("stage '" + stage + "' output " + rel +
                       " changed after the stage ran (rerun 'stylolab " +
                       stage + "')");
    }
  }
  return m;
}

StageRun::StageRun(const OutputDir& dir, std::string command,
                   const RunConfig& config)
    : out_(dir.root()),
      command_(std::move(command)),
      lap_start_(std::chrono::steady_clock::now()) {
  std::error_code ec;
  fs::remove_all(out_ / command_, ec);
  fs::remove(out_ / ManifestName(command_), ec);
  manifest_["command"] = command_;
  manifest_["toolkit_version"] = STYLOLAB_VERSION_STRING;
  manifest_["seed"] = config.seed ? nlohmann::ordered_json(*config.seed)
                                  : nlohmann::ordered_json(nullptr);
  manifest_["config"] = config.Snapshot();
  manifest_["inputs"] = nlohmann::ordered_json::array();
  manifest_["outputs"] = nlohmann::ordered_json::array();
  manifest_["notes"] = nlohmann::ordered_json::array();
  manifest_["timings_ms"] = nlohmann::ordered_json::object();
}

void StageRun::AddInput(const fs::path& path) {
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(path)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) AddInput(f);
    return;
  }
  manifest_["inputs"].push_back(
      {{"path", path.string()}, {"sha256", Sha256Hex(ReadFile(path))}});
}

void StageRun::AddUpstream(const std::string& relative) {
  manifest_["inputs"].push_back(
      {{"path", relative},
       {"sha256", Sha256Hex(ReadFile(out_ / relative))},
       {"upstream", true}});
}

void StageRun::Write(const std::string& relative, std::string_view content) {
  const fs::path path = out_ / relative;
  fs::create_directories(path.parent_path());
  WriteFile(path, content);
  manifest_["outputs"].push_back({{"path", relative},
                                  {"sha256", Sha256Hex(content)},
                                  {"bytes", content.size()}});
}

void StageRun::Note(std::string note) {
  manifest_["notes"].push_back(std::move(note));
}

void StageRun::Lap(const std::string& name) {
  const auto now = std::chrono::steady_clock::now();
  manifest_["timings_ms"][name] =
      std::chrono::duration<double, std::milli>(now - lap_start_).count();
  lap_start_ = now;
}

void StageRun::Finish() {
  WriteFile(out_ / ManifestName(command_), manifest_.dump(2) + "\n");
}

}  // namespace stylolab::cli
