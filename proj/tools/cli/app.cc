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


#include "app.h"

#include <optional>
#include <utility>

#include "CLI11.hpp"
#include "commands.h"
#include "config.h"
#include "run.h"
#include "stylolab/common/error.h"

namespace stylolab::cli {
namespace {

// "--section.key value" and "--section.key=value" pairs.
std::vector<std::pair<std::string, std::string>> ParseOverrides(
    const std::vector<std::string>& extras) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& a = extras[i];
    if (a.rfind("--", 0) != 0 || a.size() == 2) {
      throw InputError("unexpected argument '" + a + "'");
    }
    std::string key = a.substr(2);
    if (auto eq = key.find('='); eq != std::string::npos) {
      out.emplace_back(key.substr(0, eq), key.substr(eq + 1));
      continue;
    }
    if (i + 1 >= extras.size()) {
      throw InputError("option '" + a + "' needs a value");
    }
    out.emplace_back(std::move(key), extras[++i]);
  }
  return out;
}

std::string KeysFooter() {
  std::string s = "Config keys (each also accepted as --<key> VALUE):\n";
  for (const std::string& k : ConfigKeys()) s += "  " + k + "\n";
  s += "Lists are comma-separated on the command line. STYLOLAB_THREADS caps "
       "the worker count.\nExit codes: 0 success, 1 internal error, 2 input "
       "error.";
  return s;
}

}  // namespace

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"stylolab: corpus stylometry toolkit", "stylolab"};
  app.set_version_flag("--version", STYLOLAB_VERSION_STRING);
  app.require_subcommand(1);
  app.footer(KeysFooter());

  std::optional<std::string> config_path;
  std::optional<std::string> seed;
  std::optional<std::string> out_dir;
  const std::pair<const char*, const char*> commands[] = {
      {"ingest", "Load documents and publisher ratings"},
      {"features", "Extract LIWC-style, grievance and stylo features"},
      {"trust", "Group stories, extract details, score the trust index"},
      {"compare", "Compare feature distributions between groups"},
      {"classify", "Cross-validate style classifiers"},
      {"report", "Bundle tables and charts from earlier commands"},
      {"pipeline", "Run every command in order"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->allow_extras();
    sub->add_option("--config", config_path,
                    "TOML config, or a manifest JSON to replay");
    sub->add_option("--seed", seed, "Alias for --run.seed");
    sub->add_option("--out", out_dir, "Alias for --run.out");
  }

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    auto overrides = ParseOverrides(sub->remaining());
    if (seed) overrides.emplace_back("run.seed", *seed);
    if (out_dir) overrides.emplace_back("run.out", *out_dir);
    std::optional<fs::path> file;
    if (config_path) file = fs::path(*config_path);
    const RunConfig config = LoadConfig(file, overrides);
    OutputDir dir(config.out);
    RunCommand(command, config, dir, Streams{out, err});
    return kExitOk;
  } catch (const InputError& e) {
    err << "stylolab " << command << ": error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DegenerateError& e) {
    err << "stylolab " << command << ": error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "stylolab " << command << ": internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace stylolab::cli
