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


#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/corpus/corpus.h"

namespace stylolab::corpus {
namespace {

std::string Line(const std::string& id, const std::string& text,
                 const std::string& extra = "") {
  return "{\"id\":\"" + id + "\",\"text\":\"" + text + "\"" + extra + "}\n";
}

TEST(LoadDocumentsTest, SkipsBlankText) {
  std::string content = Line("a", "one") + Line("b", "  ") + Line("c", "two") +
                        Line("d", "three");
  LoadResult r = ParseDocuments(content, DocumentKind::kArticle);
  EXPECT_EQ(r.documents.size(), 3u);
  EXPECT_EQ(r.skips.skipped, 1u);
  ASSERT_EQ(r.skips.reasons.size(), 1u);
  EXPECT_EQ(r.skips.reasons[0].line, 2u);
}

TEST(LoadDocumentsTest, EmptyFileIsEmptySet) {
  LoadResult r = ParseDocuments("", DocumentKind::kPost);
  EXPECT_TRUE(r.documents.empty());
  EXPECT_EQ(r.skips.skipped, 0u);
}

TEST(LoadDocumentsTest, InvalidUtf8IsReportedWithLine) {
  std::string content = Line("a", "ok") + Line("b", "bad \xFF byte");
  LoadResult r = ParseDocuments(content, DocumentKind::kArticle);
  EXPECT_EQ(r.documents.size(), 1u);
  ASSERT_EQ(r.skips.reasons.size(), 1u);
  EXPECT_EQ(r.skips.reasons[0].line, 2u);
  EXPECT_NE(r.skips.reasons[0].reason.find("UTF-8"), std::string::npos);
}

TEST(LoadDocumentsTest, MalformedAndDuplicateLinesContinue) {
  std::string content = "{not json\n" + Line("a", "x") + Line("a", "y") +
                        Line("b", "z", ",\"published_at\":\"2023-02-30T00:00:00Z\"");
  LoadResult r = ParseDocuments(content, DocumentKind::kArticle);
  EXPECT_EQ(r.documents.size(), 1u);
  EXPECT_EQ(r.skips.skipped, 3u);
}

TEST(LoadDocumentsTest, ParsesOptionalFields) {
  std::string content = Line(
      "p1", "Hello there",
      ",\"publisher\":\"News.Example.com\",\"topic\":\"Sport\","
      "\"published_at\":\"2022-03-04T05:06:07+02:00\",\"group_label\":"
      "\"antivax\",\"style_label\":\"clickbait\",\"origin\":\"shared\","
      "\"kind\":\"post\",\"leaning\":\"far_right\"");
  LoadResult r = ParseDocuments(content, DocumentKind::kArticle);
  ASSERT_EQ(r.documents.size(), 1u);
  const Document& d = r.documents[0];
  EXPECT_EQ(d.kind, DocumentKind::kPost);
  EXPECT_EQ(*d.topic, "Sport");
  EXPECT_EQ(FormatTimestamp(*d.published_at), "2022-03-04T03:06:07Z");
  EXPECT_EQ(d.group_label, GroupLabel::kAntivax);
  EXPECT_EQ(d.style_label, StyleLabel::kClickbait);
  EXPECT_EQ(d.origin, Origin::kShared);
  EXPECT_EQ(d.leaning, (Leaning3{Lean::kRight, true}));
}

TEST(LoadDocumentsTest, SerializeRoundTripIsByteStable) {
  std::string content =
      Line("a", "x", ",\"topic\":\"World\",\"published_at\":0") +
      Line("b", "y \\\"quoted\\\"", ",\"leaning\":\"left\"");
  LoadResult first = ParseDocuments(content, DocumentKind::kArticle);
  std::string once = SerializeDocuments(first.documents);
  LoadResult second = ParseDocuments(once, DocumentKind::kArticle);
  EXPECT_EQ(SerializeDocuments(second.documents), once);
  EXPECT_EQ(first.documents.documents(), second.documents.documents());
}

TEST(LoadDocumentsTest, MissingFileIsFatal) {
  EXPECT_THROW(LoadDocuments("/nonexistent/docs.jsonl", DocumentKind::kArticle),
               InputError);
}

TEST(LeaningTest, ConsolidationMapsFivePointsToThree) {
  EXPECT_EQ(ConsolidateLeaning(Rating::kExtremeLeft), (Leaning3{Lean::kLeft, false}));
  EXPECT_EQ(ConsolidateLeaning(Rating::kModerateLeft), (Leaning3{Lean::kLeft, false}));
  EXPECT_EQ(ConsolidateLeaning(Rating::kCenter), (Leaning3{Lean::kCenter, false}));
  EXPECT_EQ(ConsolidateLeaning(Rating::kModerateRight), (Leaning3{Lean::kRight, false}));
  EXPECT_EQ(ConsolidateLeaning(Rating::kExtremeRight), (Leaning3{Lean::kRight, true}));
}

TEST(LeaningTest, ConsolidationIsIdempotentOnItsImage) {
  const Rating embed[] = {Rating::kModerateLeft, Rating::kCenter,
                          Rating::kModerateRight};
  for (Rating r : {Rating::kExtremeLeft, Rating::kModerateLeft, Rating::kCenter,
                   Rating::kModerateRight, Rating::kExtremeRight}) {
    Leaning3 once = ConsolidateLeaning(r);
    Leaning3 twice = ConsolidateLeaning(embed[static_cast<int>(once.value)]);
    EXPECT_EQ(twice.value, once.value);
    if (once.far_right) EXPECT_EQ(once.value, Lean::kRight);
  }
}

TEST(PublisherTest, DomainsNormalize) {
  EXPECT_EQ(NormalizeDomain("https://WWW.Example.com:443/path?q=1"), "example.com");
  EXPECT_EQ(NormalizeDomain("News.Site.org"), "news.site.org");
}

TEST(PublisherTest, ParseRejectsDuplicatesAndBadRatings) {
  EXPECT_THROW(ParsePublisherTable("domain,rating\na.com,center\nA.com,center\n"),
               InputError);
  EXPECT_THROW(ParsePublisherTable("domain,rating\na.com,sideways\n"), InputError);
  EXPECT_THROW(ParsePublisherTable("site,score\n"), InputError);
}

TEST(PublisherTest, LinkJoinsCaseInsensitively) {
  PublisherTable table = ParsePublisherTable(
      "domain,rating\nleft.com,moderate_left\nfar.com,extreme_right\n"
      "mid.com,center\n");
  std::vector<Document> docs(5);
  const char* pubs[] = {"LEFT.com", "far.com", "mid.com", "other.com", nullptr};
  for (int i = 0; i < 5; ++i) {
    docs[i].id = "d" + std::to_string(i);
    docs[i].text = "text";
    docs[i].topic = "World";
    docs[i].published_at = 100 * i;
    if (pubs[i]) docs[i].publisher = pubs[i];
  }
  DocumentSet set(docs);
  LinkResult r = LinkPublishers(set, table);
  EXPECT_EQ(r.matched, 3u);
  EXPECT_EQ(r.unmatched, 2u);
  EXPECT_EQ(r.documents[1].leaning, (Leaning3{Lean::kRight, true}));
  EXPECT_FALSE(r.documents[3].leaning.has_value());
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(r.documents[i].id, set[i].id);
    EXPECT_EQ(r.documents[i].text, set[i].text);
    EXPECT_EQ(r.documents[i].topic, set[i].topic);
    EXPECT_EQ(r.documents[i].published_at, set[i].published_at);
  }
  LinkResult none = LinkPublishers(set, PublisherTable{});
  EXPECT_EQ(none.matched, 0u);
}

Document Covered(std::size_t i, const std::string& topic, Lean lean) {
  Document d;
  d.id = "doc" + std::to_string(i);
  d.text = "t";
  d.topic = topic;
  d.leaning = Leaning3{lean, false};
  return d;
}

TEST(CoverageTest, SmallTableCounts) {
  std::vector<Document> docs;
  for (Lean l : {Lean::kLeft, Lean::kLeft, Lean::kCenter, Lean::kRight}) {
    docs.push_back(Covered(docs.size(), "A", l));
  }
  Document stray;
  stray.id = "stray";
  stray.text = "t";
  docs.push_back(stray);
  CoverageTable t = BuildCoverageTable(DocumentSet(docs));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].counts[0], 2u);
  EXPECT_EQ(t.rows[0].percent[0], 50);
  EXPECT_EQ(t.rows[0].percent[1], 25);
  EXPECT_EQ(t.included, 4u);
  EXPECT_EQ(t.excluded, 1u);
}

TEST(CoverageTest, NoStanceIsEmpty) {
  std::vector<Document> docs(3);
  for (int i = 0; i < 3; ++i) {
    docs[i].id = std::to_string(i);
    docs[i].text = "t";
  }
  CoverageTable t = BuildCoverageTable(DocumentSet(docs));
  EXPECT_TRUE(t.rows.empty());
  EXPECT_EQ(t.excluded, 3u);
}

TEST(CoverageTest, RoundingIsHalfAwayFromZero) {
  EXPECT_EQ(RoundedPercent(1, 8), 13);  // 12.5
  EXPECT_EQ(RoundedPercent(1, 3), 33);
  EXPECT_EQ(RoundedPercent(2, 3), 67);
  EXPECT_EQ(RoundedPercent(0, 0), 0);
}

TEST(CoverageTest, NewsTopicFixtureReproduces) {
  auto rows = ParseCsv(ReadFile(STYLOLAB_FIXTURE_DIR "/published_coverage.csv"));
  std::vector<Document> docs;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& c = rows[r].cells;
    for (int k = 0; k < 3; ++k) {
      const int n = std::stoi(c[1 + k]);
      for (int i = 0; i < n; ++i) {
        docs.push_back(Covered(docs.size(), c[0], static_cast<Lean>(k)));
      }
    }
  }
  CoverageTable t = BuildCoverageTable(DocumentSet(std::move(docs)));
  ASSERT_EQ(t.rows.size(), rows.size() - 1);
  std::size_t cell_sum = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& c = rows[r].cells;
    const CoverageRow& row = t.rows[r - 1];
    EXPECT_EQ(row.topic, c[0]);  // canonical order
    EXPECT_EQ(row.total, std::stoul(c[4]));
    int pct_sum = 0;
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(row.counts[k], std::stoul(c[1 + k])) << c[0];
      EXPECT_EQ(row.percent[k], std::stoi(c[5 + k])) << c[0] << " " << k;
      pct_sum += row.percent[k];
      cell_sum += row.counts[k];
    }
    EXPECT_NEAR(pct_sum, 100, 1) << c[0];
  }
  EXPECT_EQ(cell_sum, t.included);
  EXPECT_EQ(t.rows[0].topic, "Top Stories");
  EXPECT_EQ(t.rows[0].percent[0], 39);
  EXPECT_NE(t.ToMarkdown().find("4264 (39%)"), std::string::npos);
}

}  // namespace
}  // namespace stylolab::corpus
