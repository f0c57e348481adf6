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


// Writes the synthetic corpus: articles.jsonl, posts.jsonl, publishers.csv.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "stylolab/synth/synth.h"

int main(int argc, char** argv) {
  CLI::App app{"stylolab-synth: generate the synthetic evaluation corpus",
               "stylolab-synth"};
  std::uint64_t seed = 20221101;
  std::string out;
  app.add_option("--seed", seed, "Generator seed")->capture_default_str();
  app.add_option("--out", out, "Output directory")->required();
  CLI11_PARSE(app, argc, argv);
  try {
    const stylolab::synth::SyntheticCorpus corpus =
        stylolab::synth::GenerateCorpus(seed);
    stylolab::synth::WriteCorpus(corpus, out);
    std::cout << "wrote " << corpus.articles.size() << " articles and "
              << corpus.posts.size() << " posts to " << out << "\n";
  } catch (const std::exception& e) {
    std::cerr << "stylolab-synth: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
