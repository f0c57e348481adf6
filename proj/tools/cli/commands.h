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


// Pipeline commands. Each reads its inputs, writes under <out>/<command>/
// plus manifest_<command>.json, and throws InputError on user errors.

#ifndef STYLOLAB_TOOLS_CLI_COMMANDS_H_
#define STYLOLAB_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

#include "config.h"
#include "run.h"

namespace stylolab::cli {

// Progress goes to `log`, warnings to `warn`.
struct Streams {
  std::ostream& log;
  std::ostream& warn;
};

void CmdIngest(const RunConfig& config, const OutputDir& dir, Streams io);
void CmdFeatures(const RunConfig& config, const OutputDir& dir, Streams io);
void CmdTrust(const RunConfig& config, const OutputDir& dir, Streams io);
void CmdCompare(const RunConfig& config, const OutputDir& dir, Streams io);
void CmdClassify(const RunConfig& config, const OutputDir& dir, Streams io);
void CmdReport(const RunConfig& config, const OutputDir& dir, Streams io);

// Command names in pipeline order.
const std::vector<std::string>& CommandNames();

// Runs one command by name; "pipeline" runs all of them in order.
void RunCommand(const std::string& name, const RunConfig& config,
                const OutputDir& dir, Streams io);

}  // namespace stylolab::cli

#endif  // STYLOLAB_TOOLS_CLI_COMMANDS_H_
