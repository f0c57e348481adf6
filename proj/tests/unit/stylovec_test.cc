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


#include <cmath>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "stylolab/common/error.h"
#include "stylolab/common/random.h"
#include "stylolab/lexicon/features.h"
#include "stylolab/stylovec/stylo.h"

namespace stylolab::stylovec {
namespace {

using textproc::Analyze;

std::size_t Index(std::string_view name) {
  const auto& names = MetricNames();
  auto it = std::find(names.begin(), names.end(), name);
  EXPECT_NE(it, names.end()) << name;
  return static_cast<std::size_t>(it - names.begin());
}

double Metric(const StyloVector& v, std::string_view name) {
  return v.values[Index(name)];
}

TEST(StyloSchemaTest, SixtyFourUniqueNames) {
  EXPECT_EQ(MetricNames().size(), 64u);
  std::set<std::string> unique(MetricNames().begin(), MetricNames().end());
  EXPECT_EQ(unique.size(), 64u);
  auto j = nlohmann::json::parse(SchemaJson());
  EXPECT_EQ(j["schema_version"], "v1");
  EXPECT_EQ(j["metrics"].size(), 64u);
}

TEST(StyloTest, Examples) {
  StyloExtractor ex;
  EXPECT_DOUBLE_EQ(Metric(ex.Extract("a", Analyze("a a a a")), "type_token_ratio"),
                   0.25);
  EXPECT_EQ(Metric(ex.Extract("b", Analyze("I run fast. I run fast. I run fast.")),
                   "sent_len_cv"),
            0.0);
  EXPECT_DOUBLE_EQ(
      Metric(ex.Extract("c", Analyze("Why? Why? Stop.")), "question_sentence_ratio"),
      2.0 / 3.0);
  EXPECT_THROW(ex.Extract("d", Analyze("42 ?")), DegenerateError);
}

TEST(StyloTest, SurfaceMetrics) {
  StyloExtractor ex;
  StyloVector v = ex.Extract(
      "x", Analyze("WOW!!! We really can't stop... Seriously, they said: no."));
  EXPECT_DOUBLE_EQ(Metric(v, "exclamation_sentence_ratio"), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(Metric(v, "uppercase_word_ratio"), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(Metric(v, "contraction_ratio"), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(Metric(v, "pron_1pl_ratio"), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(Metric(v, "pron_3pl_ratio"), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(Metric(v, "ly_word_ratio"), 2.0 / 9.0);
  // 18 tokens: 9 words and 9 punctuation marks.
  EXPECT_DOUBLE_EQ(Metric(v, "punct_ratio"), 9.0 / 18.0);
  EXPECT_DOUBLE_EQ(Metric(v, "ellipsis_rate"), 1.0 / 18.0);
  EXPECT_DOUBLE_EQ(Metric(v, "colon_rate"), 1.0 / 18.0);
}

std::string RandomSentence(Rng& rng) {
  static const char* kWords[] = {"the", "we", "you", "Could", "never",
                                 "quickly", "running", "walked", "house",
                                 "42", "extraordinary", "and", "why", "of"};
  static const char* kEnds[] = {".", "!", "?", "...", "!!"};
  std::string s = "They";
  const std::size_t n = rng.UniformIndex(30);
  for (std::size_t i = 0; i < n; ++i) {
    s += rng.Bernoulli(0.1) ? ", " : " ";
    s += kWords[rng.UniformIndex(std::size(kWords))];
  }
  return s + kEnds[rng.UniformIndex(std::size(kEnds))];
}

TEST(StyloTest, FixedLengthAndUnitRange) {
  StyloExtractor ex;
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    const std::size_t sentences = 1 + rng.UniformIndex(trial < 50 ? 2 : 200);
    for (std::size_t s = 0; s < sentences; ++s) text += RandomSentence(rng) + " ";
    StyloVector v = ex.Extract("d", Analyze(text));
    ASSERT_EQ(v.values.size(), 64u);
    for (std::size_t i = 0; i < v.values.size(); ++i) {
      EXPECT_TRUE(std::isfinite(v.values[i]));
      EXPECT_GE(v.values[i], 0.0) << MetricNames()[i];
      EXPECT_LE(v.values[i], 1.0) << MetricNames()[i];
    }
    EXPECT_EQ(ex.Extract("d", Analyze(text)).values, v.values);
  }
}

TEST(StyloTest, SelfConcatenationKeepsRatios) {
  StyloExtractor ex;
  Rng rng(19);
  const std::size_t ttr = Index("type_token_ratio");
  const std::size_t hapax = Index("hapax_ratio");
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    const std::size_t sentences = 1 + rng.UniformIndex(6);
    for (std::size_t s = 0; s < sentences; ++s) {
      text += (s ? " " : "") + RandomSentence(rng);
    }
    StyloVector once = ex.Extract("d", Analyze(text));
    StyloVector twice = ex.Extract("d", Analyze(text + " " + text));
    for (std::size_t i = 0; i < once.values.size(); ++i) {
      if (i == ttr || i == hapax) {
        EXPECT_LE(twice.values[i], once.values[i]);
      } else {
        EXPECT_NEAR(twice.values[i], once.values[i], 1e-12)
            << MetricNames()[i] << " on: " << text;
      }
    }
  }
}

TEST(StyloTest, ClosedClassesMustMatchSchema) {
  auto classes = DefaultClosedClasses();
  ASSERT_EQ(classes.size(), ClosedClassNames().size());
  std::swap(classes[0], classes[1]);
  EXPECT_THROW(StyloExtractor{classes}, InputError);
  classes.pop_back();
  EXPECT_THROW(StyloExtractor{classes}, InputError);
}

class LgsTest : public ::testing::Test {
 protected:
  lexicon::LiwcExtractor liwc_{lexicon::LiwcConfig::Default()};
  lexicon::GrievanceExtractor grievance_ = lexicon::GrievanceExtractor::Default();
  StyloExtractor stylo_;
};

TEST_F(LgsTest, ConcatenationHas175UniqueNames) {
  auto doc = Analyze("We will fight for our people. They cannot stop us!");
  FeatureVector lgs = ConcatLgs(liwc_.Extract("d", doc),
                                grievance_.Extract("d", doc),
                                stylo_.Extract("d", doc));
  EXPECT_EQ(lgs.size(), 175u);
  std::set<std::string> unique(lgs.names.begin(), lgs.names.end());
  EXPECT_EQ(unique.size(), 175u);
  EXPECT_EQ(lgs.names.front(), "liwc.Segment");
  EXPECT_EQ(lgs.names[89], "grievance.deadline");
  EXPECT_EQ(lgs.names[111], "stylo.sent_len_mean");
}

TEST_F(LgsTest, InputOrderDoesNotMatter) {
  auto doc = Analyze("Short text here.");
  FeatureVector l = liwc_.Extract("d", doc);
  FeatureVector g = grievance_.Extract("d", doc);
  FeatureVector s = stylo_.Extract("d", doc).ToFeatureVector();
  FeatureVector a[] = {l, g, s};
  FeatureVector b[] = {s, l, g};
  FeatureVector x = ConcatLgs(a), y = ConcatLgs(b);
  EXPECT_EQ(x.names, y.names);
  EXPECT_EQ(x.values, y.values);
}

TEST_F(LgsTest, MismatchAndMissingAreErrors) {
  auto doc = Analyze("Short text here.");
  FeatureVector l = liwc_.Extract("d1", doc);
  FeatureVector g = grievance_.Extract("d2", doc);
  EXPECT_THROW(ConcatLgs(l, g, stylo_.Extract("d1", doc)), InputError);
  FeatureVector two[] = {l, stylo_.Extract("d1", doc).ToFeatureVector()};
  EXPECT_THROW(ConcatLgs(two), InputError);
}

}  // namespace
}  // namespace stylolab::stylovec
