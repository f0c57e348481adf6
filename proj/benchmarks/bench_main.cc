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


#include <algorithm>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "stylolab/common/random.h"
#include "stylolab/corpus/corpus.h"
#include "stylolab/learn/dataset.h"
#include "stylolab/learn/evaluate.h"
#include "stylolab/stylovec/lgs.h"
#include "stylolab/synth/synth.h"
#include "stylolab/textproc/tokenizer.h"

namespace stylolab {
namespace {

// Documents of roughly 500 tokens built from the post generators.
corpus::DocumentSet Corpus(std::size_t n) {
  std::vector<corpus::Document> docs(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(DeriveSeed(7, i));
    while (std::count(docs[i].text.begin(), docs[i].text.end(), ' ') < 420) {
      const auto style = static_cast<synth::PostStyle>(rng.UniformIndex(3));
      docs[i].text += synth::GeneratePost(style, rng) + " ";
    }
    docs[i].id = "d" + std::to_string(i);
    docs[i].kind = corpus::DocumentKind::kPost;
  }
  return corpus::DocumentSet(std::move(docs));
}

void BM_Tokenize(benchmark::State& state) {
  const corpus::DocumentSet docs = Corpus(100);
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& d : docs) {
      benchmark::DoNotOptimize(textproc::Tokenize(d.text));
      bytes += d.text.size();
    }
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_Tokenize);

void BM_ExtractLgs(benchmark::State& state) {
  const corpus::DocumentSet docs = Corpus(1000);
  const auto extractors = stylovec::LgsExtractors::Default();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        stylovec::ExtractLgsTables(docs, extractors, workers));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_ExtractLgs)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ForestCrossValidation(benchmark::State& state) {
  std::vector<corpus::Document> posts = synth::GenerateGroupPosts(200, 3);
  const corpus::DocumentSet docs(std::move(posts));
  const auto tables =
      stylovec::ExtractLgsTables(docs, stylovec::LgsExtractors::Default());
  std::vector<std::string> labels;
  for (const std::string& id : tables.lgs.ids()) {
    labels.emplace_back(corpus::ToString(*docs.Find(id)->group_label));
  }
  const learn::Dataset data =
      learn::MakeDataset(tables.lgs, labels, learn::FeatureFamily::kLgs);
  learn::Hyperparams params;
  params.forest.trees = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(learn::CrossValidate(learn::ModelKind::kForest,
                                                  data, 5, params, 1));
  }
}
BENCHMARK(BM_ForestCrossValidation)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace stylolab

BENCHMARK_MAIN();
