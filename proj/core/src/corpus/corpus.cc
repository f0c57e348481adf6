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

#include "stylolab/corpus/corpus.h"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "stylolab/common/csv.h"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/utf8.h"

namespace stylolab::corpus {
namespace {

using nlohmann::ordered_json;

bool IsBlank(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (!utf8::IsSpace(utf8::Next(s, pos))) return false;
  }
  return true;
}

// Returns an error message, or empty when the field was absent or valid.
std::string OptionalString(const ordered_json& obj, const char* key,
                           std::optional<std::string>& out) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) return std::string("field '") + key + "' not a string";
  std::string v = it->get<std::string>();
  if (!IsBlank(v)) out = std::move(v);
  return {};
}

std::optional<Leaning3> ParseLeaningField(std::string_view s) {
  if (s == "far_right") return Leaning3{Lean::kRight, true};
  if (auto lean = ParseLean(s)) return Leaning3{*lean, false};
  if (auto rating = ParseRating(s)) return ConsolidateLeaning(*rating);
  return std::nullopt;
}

// Parses one line into `doc`; returns the skip reason or empty on success.
std::string ParseLine(std::string_view line, DocumentKind kind,
                      Document& doc) {
  std::size_t bad = 0;
  if (!utf8::IsValid(line, &bad)) {
    return "invalid UTF-8 at byte " + std::to_string(bad);
  }
  ordered_json obj;
  try {
    obj = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    return std::string("malformed JSON: ") + e.what();
  }
  if (!obj.is_object()) return "record is not a JSON object";

  doc = Document{};
  doc.kind = kind;

  auto id = obj.find("id");
  if (id == obj.end() || id->is_null()) return "missing id";
  if (id->is_string()) {
    doc.id = id->get<std::string>();
  } else if (id->is_number_integer()) {
    doc.id = id->dump();
  } else {
    return "field 'id' not a string";
  }
  if (IsBlank(doc.id)) return "empty id";

  auto text = obj.find("text");
  if (text == obj.end() || text->is_null()) return "missing text";
  if (!text->is_string()) return "field 'text' not a string";
  doc.text = text->get<std::string>();
  if (IsBlank(doc.text)) return "empty text";

  for (auto [key, field] :
       {std::pair{"title", &doc.title}, std::pair{"publisher", &doc.publisher},
        std::pair{"topic", &doc.topic}}) {
    std::string err = OptionalString(obj, key, *field);
    if (!err.empty()) return err;
  }

  if (auto ts = obj.find("published_at"); ts != obj.end() && !ts->is_null()) {
    if (ts->is_number_integer()) {
      doc.published_at = ts->get<std::int64_t>();
    } else if (ts->is_string()) {
      auto parsed = ParseTimestamp(ts->get<std::string>());
      if (!parsed) return "invalid published_at '" + ts->get<std::string>() + "'";
      doc.published_at = parsed;
    } else {
      return "field 'published_at' not a string or integer";
    }
  }

  auto label = [&](const char* key, auto parse, auto& out) -> std::string {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return {};
    if (!it->is_string()) return std::string("field '") + key + "' not a string";
    auto v = parse(it->get<std::string>());
    if (!v) return std::string("unknown ") + key + " '" + it->get<std::string>() + "'";
    out = *v;
    return {};
  };
  std::string err = label("group_label", ParseGroupLabel, doc.group_label);
  if (err.empty()) err = label("style_label", ParseStyleLabel, doc.style_label);
  if (err.empty()) err = label("leaning", ParseLeaningField, doc.leaning);
  if (!err.empty()) return err;
  std::optional<Origin> origin;
  err = label("origin", ParseOrigin, origin);
  if (!err.empty()) return err;
  if (origin) doc.origin = *origin;
  if (auto k = obj.find("kind"); k != obj.end() && k->is_string()) {
    if (*k == "article") {
      doc.kind = DocumentKind::kArticle;
    } else if (*k == "post") {
      doc.kind = DocumentKind::kPost;
    } else {
      return "unknown kind '" + k->get<std::string>() + "'";
    }
  }
  return {};
}

}  // namespace

DocumentSet::DocumentSet(std::vector<Document> documents,
                         std::vector<std::string> provenance)
    : documents_(std::move(documents)), provenance_(std::move(provenance)) {
  index_.reserve(documents_.size());
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    const std::string& id = documents_[i].id;
    if (id.empty()) throw InputError("document with empty id");
    if (!index_.emplace(id, i).second) {
      throw InputError("duplicate document id '" + id + "'");
    }
  }
}

const Document* DocumentSet::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &documents_[it->second];
}

DocumentSet DocumentSet::Merge(const DocumentSet& a, const DocumentSet& b) {
  std::vector<Document> docs = a.documents_;
  docs.insert(docs.end(), b.documents_.begin(), b.documents_.end());
  std::vector<std::string> prov = a.provenance_;
  prov.insert(prov.end(), b.provenance_.begin(), b.provenance_.end());
  return DocumentSet(std::move(docs), std::move(prov));
}

std::string SkipReport::ToJson() const {
  ordered_json j;
  j["skipped"] = skipped;
  j["reasons"] = ordered_json::array();
  for (const SkipReason& r : reasons) {
    j["reasons"].push_back({{"line", r.line}, {"reason", r.reason}});
  }
  return j.dump(2) + "\n";
}

LoadResult ParseDocuments(std::string_view content, DocumentKind kind,
                          std::string provenance) {
  LoadResult result;
  std::vector<Document> docs;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(content)) {
    ++line_no;
    if (TrimAscii(line).empty()) continue;
    Document doc;
    std::string reason = ParseLine(line, kind, doc);
    if (reason.empty() && !seen.insert(doc.id).second) {
      reason = "duplicate id '" + doc.id + "'";
    }
    if (!reason.empty()) {
      ++result.skips.skipped;
      result.skips.reasons.push_back({line_no, std::move(reason)});
      continue;
    }
    docs.push_back(std::move(doc));
  }
  std::vector<std::string> prov;
  if (!provenance.empty()) prov.push_back(std::move(provenance));
  result.documents = DocumentSet(std::move(docs), std::move(prov));
  return result;
}

LoadResult LoadDocuments(const std::filesystem::path& path, DocumentKind kind) {
  return ParseDocuments(ReadFile(path), kind, path.string());
}

std::string SerializeDocuments(const DocumentSet& docs) {
  std::string out;
  for (const Document& d : docs) {
    ordered_json j;
    j["id"] = d.id;
    j["kind"] = ToString(d.kind);
    j["text"] = d.text;
    if (d.title) j["title"] = *d.title;
    if (d.publisher) j["publisher"] = *d.publisher;
    if (d.topic) j["topic"] = *d.topic;
    if (d.published_at) j["published_at"] = FormatTimestamp(*d.published_at);
    if (d.group_label) j["group_label"] = ToString(*d.group_label);
    if (d.style_label) j["style_label"] = ToString(*d.style_label);
    j["origin"] = ToString(d.origin);
    if (d.leaning) {
      j["leaning"] = d.leaning->far_right ? std::string("far_right")
                                          : std::string(ToString(d.leaning->value));
    }
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

Leaning3 ConsolidateLeaning(Rating raw) {
  switch (raw) {
    case Rating::kExtremeLeft:
    case Rating::kModerateLeft:
      return {Lean::kLeft, false};
    case Rating::kCenter:
      return {Lean::kCenter, false};
    case Rating::kModerateRight:
      return {Lean::kRight, false};
    case Rating::kExtremeRight:
      return {Lean::kRight, true};
  }
  return {Lean::kCenter, false};
}

std::string NormalizeDomain(std::string_view raw) {
  std::string d = ToLowerAscii(TrimAscii(raw));
  if (auto p = d.find("://"); p != std::string::npos) d.erase(0, p + 3);
  if (auto p = d.find_first_of("/?#"); p != std::string::npos) d.erase(p);
  if (auto p = d.find(':'); p != std::string::npos) d.erase(p);
  if (d.rfind("www.", 0) == 0) d.erase(0, 4);
  while (!d.empty() && d.back() == '.') d.pop_back();
  return d;
}

void PublisherTable::Add(std::string_view domain, Rating rating) {
  std::string key = NormalizeDomain(domain);
  if (key.empty()) throw InputError("empty publisher domain");
  if (!entries_.emplace(key, rating).second) {
    throw InputError("duplicate publisher domain '" + key + "'");
  }
}

const Rating* PublisherTable::Find(std::string_view domain) const {
  auto it = entries_.find(NormalizeDomain(domain));
  return it == entries_.end() ? nullptr : &it->second;
}

PublisherTable ParsePublisherTable(std::string_view csv) {
  std::vector<CsvRow> rows = ParseCsv(csv);
  if (rows.empty()) throw ParseError("publisher table is empty", 0);
  const auto& header = rows.front().cells;
  if (header.size() != 2 || TrimAscii(header[0]) != "domain" ||
      TrimAscii(header[1]) != "rating") {
    throw ParseError("publisher table header must be 'domain,rating'",
                     rows.front().line);
  }
  PublisherTable table;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    if (row.cells.size() != 2) {
      throw ParseError("expected 2 fields", row.line);
    }
    auto rating = ParseRating(TrimAscii(row.cells[1]));
    if (!rating) {
      throw ParseError("unknown rating '" + row.cells[1] + "'", row.line);
    }
    try {
      table.Add(row.cells[0], *rating);
    } catch (const InputError& e) {
      throw ParseError(e.what(), row.line);
    }
  }
  return table;
}

PublisherTable LoadPublisherTable(const std::filesystem::path& path) {
  return ParsePublisherTable(ReadFile(path));
}

LinkResult LinkPublishers(const DocumentSet& docs,
                          const PublisherTable& table) {
  LinkResult result;
  std::vector<Document> out = docs.documents();
  for (Document& d : out) {
    const Rating* rating = d.publisher ? table.Find(*d.publisher) : nullptr;
    if (rating) {
      d.leaning = ConsolidateLeaning(*rating);
      ++result.matched;
    } else {
      ++result.unmatched;
    }
  }
  result.documents = DocumentSet(std::move(out), docs.provenance());
  return result;
}

const std::vector<std::string>& CanonicalTopics() {
  static const std::vector<std::string> kTopics = {
      "Top Stories", "Australia", "World",           "Technology",
      "Sport",       "Entertainment", "Health",      "China",
      "Business",    "Science",   "Finance",         "Human migration",
      "Climate change", "Taiwan"};
  return kTopics;
}

int RoundedPercent(std::size_t count, std::size_t total) {
  if (total == 0) return 0;
  // floor(100 * count / total + 1/2) in exact integer arithmetic.
  return static_cast<int>((200 * count + total) / (2 * total));
}

CoverageTable BuildCoverageTable(const DocumentSet& docs) {
  CoverageTable table;
  std::map<std::string, CoverageRow> by_topic;
  for (const Document& d : docs) {
    if (!d.topic || !d.leaning) {
      ++table.excluded;
      continue;
    }
    CoverageRow& row = by_topic[*d.topic];
    row.topic = *d.topic;
    ++row.counts[static_cast<int>(d.leaning->value)];
    ++row.total;
    ++table.included;
  }
  const auto& canon = CanonicalTopics();
  for (const std::string& t : canon) {
    if (auto it = by_topic.find(t); it != by_topic.end()) {
      table.rows.push_back(it->second);
      by_topic.erase(it);
    }
  }
  for (auto& [topic, row] : by_topic) table.rows.push_back(row);
  for (CoverageRow& row : table.rows) {
    for (int k = 0; k < 3; ++k) {
      row.percent[k] = RoundedPercent(row.counts[k], row.total);
    }
  }
  return table;
}

std::string CoverageTable::ToCsv() const {
  CsvWriter w;
  w.AddRow({"topic", "n_left", "n_center", "n_right", "total", "pct_left",
            "pct_center", "pct_right"});
  for (const CoverageRow& r : rows) {
    w.AddRow({r.topic, std::to_string(r.counts[0]), std::to_string(r.counts[1]),
              std::to_string(r.counts[2]), std::to_string(r.total),
              std::to_string(r.percent[0]), std::to_string(r.percent[1]),
              std::to_string(r.percent[2])});
  }
  return w.str();
}

std::string CoverageTable::ToMarkdown() const {
  std::string out = "Number of news articles by topic and political leaning.\n";
  if (rows.empty()) return out + "\n(no stance-identified documents)\n";
  constexpr std::size_t kPerBlock = 7;
  static constexpr const char* kLabels[] = {"L", "C", "R"};
  for (std::size_t start = 0; start < rows.size(); start += kPerBlock) {
    std::size_t end = std::min(rows.size(), start + kPerBlock);
    out += "\n|       |";
    for (std::size_t i = start; i < end; ++i) out += " " + rows[i].topic + " |";
    out += "\n|---|";
    for (std::size_t i = start; i < end; ++i) out += "---:|";
    out += "\n";
    for (int k = 0; k < 3; ++k) {
      out += std::string("| ") + kLabels[k] + " |";
      for (std::size_t i = start; i < end; ++i) {
        out += " " + std::to_string(rows[i].counts[k]) + " (" +
               std::to_string(rows[i].percent[k]) + "%) |";
      }
      out += "\n";
    }
    out += "| Total |";
    for (std::size_t i = start; i < end; ++i) {
      out += " " + std::to_string(rows[i].total) + " |";
    }
    out += "\n";
  }
  out += "\nIncluded: " + std::to_string(included) +
         ", excluded (no topic or leaning): " + std::to_string(excluded) + "\n";
  return out;
}

}  // namespace stylolab::corpus
