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


#include <atomic>
#include <cmath>
#include <filesystem>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/feature_table.h"
#include "stylolab/common/hash.h"
#include "stylolab/common/io.h"
#include "stylolab/common/parallel.h"
#include "stylolab/common/random.h"
#include "stylolab/common/resources.h"
#include "stylolab/common/utf8.h"

namespace stylolab {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
}

TEST(RngTest, UniformIndexStaysInRange) {
  Rng rng(7);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) {
    auto k = rng.UniformIndex(5);
    ASSERT_LT(k, 5u);
    ++hits[k];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(RngTest, NormalHasUnitMoments) {
  Rng rng(1);
  double s = 0, s2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double x = rng.Normal();
    s += x;
    s2 += x * x;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.02);
}

TEST(RngTest, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 1000; ++s) seeds.insert(DeriveSeed(42, s));
  EXPECT_EQ(seeds.size(), 1000u);
  EXPECT_EQ(DeriveSeed(42, 3), DeriveSeed(42, 3));
}

TEST(ParallelTest, CoversEveryIndexOnce) {
  for (int workers : {1, 2, 4, 7}) {
    std::vector<std::atomic<int>> hits(1000);
    ParallelFor(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) ASSERT_EQ(h.load(), 1);
  }
}

TEST(ParallelTest, PropagatesExceptions) {
  EXPECT_THROW(ParallelFor(100, 3,
                           [](std::size_t i) {
                             if (i == 57) throw InputError("boom");
                           }),
               InputError);
}

TEST(HashTest, KnownVectors) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(Sha256Hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(CsvTest, QuotedCellsRoundTrip) {
  CsvWriter w;
  w.AddRow({"id", "text"});
  w.AddRow({"a", "he said \"hi\", then\nleft"});
  auto rows = ParseCsv(w.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].cells[1], "he said \"hi\", then\nleft");
  EXPECT_EQ(rows[1].line, 2u);
}

TEST(CsvTest, UnterminatedQuoteThrows) {
  EXPECT_THROW(ParseCsv("a,\"b\n"), ParseError);
}

TEST(FeatureTableTest, CsvRoundTripIsExact) {
  FeatureTable t({"x", "y"});
  const double a[] = {0.1, 1.0 / 3.0};
  const double b[] = {-2.5e-17, 12345.678};
  t.AddRow("d1", a);
  t.AddRow("d2", b);
  FeatureTable back = FeatureTable::FromCsv(t.ToCsv());
  EXPECT_EQ(back.columns(), t.columns());
  EXPECT_EQ(back.ids(), t.ids());
  EXPECT_EQ(back.values(), t.values());
  EXPECT_EQ(back.Column(1), (std::vector<double>{1.0 / 3.0, 12345.678}));
}

TEST(FeatureTableTest, RejectsWrongWidth) {
  FeatureTable t({"x"});
  const double v[] = {1, 2};
  EXPECT_THROW(t.AddRow("a", v), InputError);
  EXPECT_THROW(t.ColumnIndex("nope"), InputError);
}

TEST(IoTest, WriteThenReadCreatesDirectories) {
  auto dir = std::filesystem::temp_directory_path() / "stylolab_io_test";
  std::filesystem::remove_all(dir);
  WriteFile(dir / "a" / "b.txt", "payload");
  EXPECT_EQ(ReadFile(dir / "a" / "b.txt"), "payload");
  std::filesystem::remove_all(dir);
  EXPECT_THROW(ReadFile(dir / "missing"), InputError);
}

TEST(IoTest, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1e-300, 123456789.125, -0.0, 2.0 / 3.0}) {
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
  EXPECT_EQ(FormatFixed(0.126, 2), "0.13");
}

TEST(Utf8Test, DecodesAndLowercases) {
  EXPECT_TRUE(utf8::IsValid("caf\xC3\xA9"));
  std::size_t bad = 0;
  EXPECT_FALSE(utf8::IsValid("ab\xC3", &bad));
  EXPECT_EQ(bad, 2u);
  EXPECT_EQ(utf8::ToLower("\xC3\x89T\xC3\x89"), "\xC3\xA9t\xC3\xA9");
  EXPECT_EQ(utf8::Length("caf\xC3\xA9"), 4u);
}

TEST(ResourcesTest, ShippedDataIsEmbedded) {
  auto names = EmbeddedResourceNames();
  EXPECT_NE(std::find(names.begin(), names.end(), "liwc_open.dic"), names.end());
  EXPECT_FALSE(EmbeddedResource("closed_class/pron_1sg.txt").empty());
  EXPECT_THROW(EmbeddedResource("nope"), Error);
}

}  // namespace
}  // namespace stylolab
