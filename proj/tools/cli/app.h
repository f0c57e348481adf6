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


#ifndef STYLOLAB_TOOLS_CLI_APP_H_
#define STYLOLAB_TOOLS_CLI_APP_H_

#include <ostream>
#include <string>
#include <vector>

namespace stylolab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

// Runs `stylolab <command> [options]`; args excludes the program name.
// Returns the process exit code.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace stylolab::cli

#endif  // STYLOLAB_TOOLS_CLI_APP_H_
