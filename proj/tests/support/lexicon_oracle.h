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


// Random lexica and texts over a tiny alphabet, so exact and wildcard
// patterns overlap heavily, plus a linear-scan reference implementation.

#ifndef STYLOLAB_TESTS_SUPPORT_LEXICON_ORACLE_H_
#define STYLOLAB_TESTS_SUPPORT_LEXICON_ORACLE_H_

#include <string>
#include <vector>

#include "stylolab/common/feature_vector.h"
#include "stylolab/common/random.h"
#include "stylolab/lexicon/lexicon.h"
#include "stylolab/textproc/tokenizer.h"

namespace stylolab::testing {

inline std::string RandomWord(Rng& rng, std::size_t max_len) {
  static const char kAlphabet[] = "abc";
  std::string w;
  const std::size_t len = 1 + rng.UniformIndex(max_len);
  for (std::size_t i = 0; i < len; ++i) w += kAlphabet[rng.UniformIndex(3)];
  return w;
}

// Serialized .dic text; the caller parses it so the parser is exercised too.
inline std::string RandomDic(Rng& rng) {
  const std::size_t categories = 1 + rng.UniformIndex(8);
  std::vector<int> ids;
  std::string dic = "%\n";
  for (std::size_t c = 0; c < categories; ++c) {
    ids.push_back(static_cast<int>(3 * c + 1 + rng.UniformIndex(3)));
    dic += std::to_string(ids.back()) + "\tcat" + std::to_string(c) + "\n";
  }
  dic += "%\n";
  const std::size_t patterns = 1 + rng.UniformIndex(25);
  for (std::size_t p = 0; p < patterns; ++p) {
    std::string w = RandomWord(rng, 4);
    if (rng.Bernoulli(0.2)) w[0] = static_cast<char>(w[0] - 'a' + 'A');
    if (rng.Bernoulli(0.4)) w += '*';
    dic += w;
    const std::size_t k = 1 + rng.UniformIndex(3);
    for (std::size_t i = 0; i < k; ++i) {
      dic += "\t" + std::to_string(ids[rng.UniformIndex(ids.size())]);
    }
    dic += "\n";
  }
  return dic;
}

inline std::string RandomLexiconText(Rng& rng) {
  static const char* kExtras[] = {".", ",", "!", "42", "7.5", "x", "Ab", "d'a"};
  std::string text = RandomWord(rng, 6);  // at least one word
  const std::size_t n = rng.UniformIndex(40);
  for (std::size_t i = 0; i < n; ++i) {
    text += ' ';
    if (rng.Bernoulli(0.2)) {
      text += kExtras[rng.UniformIndex(std::size(kExtras))];
    } else {
      std::string w = RandomWord(rng, 6);
      if (rng.Bernoulli(0.1)) w[0] = static_cast<char>(w[0] - 'a' + 'A');
      text += w;
    }
  }
  return text;
}

// Every word token is compared against every pattern.
inline FeatureVector NaiveDictFeatures(const textproc::TokenStream& doc,
                                       const lexicon::Lexicon& lex) {
  const auto& cats = lex.categories();
  std::vector<std::size_t> counts(cats.size(), 0);
  std::size_t dic = 0;
  for (const auto& t : doc.tokens) {
    if (t.kind != textproc::TokenKind::kWord) continue;
    std::vector<bool> hit(cats.size(), false);
    bool any = false;
    for (const auto& p : lex.patterns()) {
      const bool match = p.wildcard ? t.norm.rfind(p.stem, 0) == 0
                                    : t.norm == p.stem;
      if (!match) continue;
      any = true;
      for (int id : p.category_ids) {
        for (std::size_t c = 0; c < cats.size(); ++c) {
          if (cats[c].id == id) hit[c] = true;
        }
      }
    }
    if (any) ++dic;
    for (std::size_t c = 0; c < cats.size(); ++c) counts[c] += hit[c];
  }
  const double wc = static_cast<double>(doc.wc());
  FeatureVector out;
  out.word_count = doc.wc();
  out.Add("Dic", 100.0 * static_cast<double>(dic) / wc);
  for (std::size_t c = 0; c < cats.size(); ++c) {
    out.Add(cats[c].name, 100.0 * static_cast<double>(counts[c]) / wc);
  }
  return out;
}

}  // namespace stylolab::testing

#endif  // STYLOLAB_TESTS_SUPPORT_LEXICON_ORACLE_H_
