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


#include "stylolab/stylovec/stylo.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "json.hpp"
#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/resources.h"
#include "stylolab/common/utf8.h"
#include "stylolab/textproc/sentences.h"

namespace stylolab::stylovec {
namespace {

using textproc::Token;
using textproc::TokenKind;

constexpr std::size_t kShortSentence = 8;   // words, inclusive
constexpr std::size_t kLongSentence = 25;   // words, inclusive
constexpr std::size_t kLongWord = 7;        // letters, inclusive
constexpr std::size_t kShortWord = 3;       // letters, inclusive

const std::vector<std::string> kClosedClasses = {
    "pron_1sg",     "pron_1pl",     "pron_2",       "pron_3sg",
    "pron_3pl",     "pron_impersonal", "determiners", "articles",
    "prepositions", "conj_coord",   "conj_subord",  "auxiliaries",
    "modals",       "negations",    "wh_words",     "quantifiers",
    "intensifiers", "demonstratives"};

// Index of a class in kClosedClasses; used for the sentence-initial metrics.
constexpr std::size_t kConjCoord = 9;
constexpr std::size_t kWhWords = 14;
constexpr std::size_t kFirstPronoun = 0;
constexpr std::size_t kLastPronoun = 5;

std::vector<std::string> BuildNames() {
  std::vector<std::string> n = {
      "sent_len_mean",        "sent_len_median",
      "sent_len_max",         "sent_len_min",
      "sent_len_std",         "sent_len_cv",
      "short_sentence_ratio", "long_sentence_ratio",
      "question_sentence_ratio", "exclamation_sentence_ratio",
      "declarative_sentence_ratio", "unterminated_sentence_ratio",
      "type_token_ratio",     "hapax_ratio",
      "numeric_sentence_ratio", "word_len_mean",
      "word_len_std",         "long_word_ratio",
      "short_word_ratio",     "uppercase_word_ratio",
      "capitalized_word_ratio", "contraction_ratio",
      "digit_token_ratio",    "punct_ratio",
      "period_rate",          "comma_rate",
      "question_mark_rate",   "exclamation_rate",
      "colon_rate",           "semicolon_rate",
      "dash_rate",            "bracket_rate",
      "quote_rate",           "ellipsis_rate",
      "other_punct_rate",     "repeated_punct_ratio"};
  for (const std::string& c : kClosedClasses) n.push_back(c + "_ratio");
  for (const char* extra :
       {"function_word_ratio", "pronoun_ratio", "sentence_initial_conj_ratio",
        "sentence_initial_pronoun_ratio", "sentence_initial_wh_ratio",
        "repeated_word_ratio", "ly_word_ratio", "ing_word_ratio",
        "ed_word_ratio", "lexical_word_ratio"}) {
    n.push_back(extra);
  }
  return n;
}

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

double Capped(double value, double cap) { return std::min(value / cap, 1.0); }

bool IsQuote(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == 0x201C || cp == 0x201D ||
         cp == 0x2018 || cp == 0x2019 || cp == 0x00AB || cp == 0x00BB;
}

bool IsDash(char32_t cp) { return cp == '-' || cp == 0x2013 || cp == 0x2014; }

bool IsBracket(char32_t cp) {
  return cp == '(' || cp == ')' || cp == '[' || cp == ']' || cp == '{' ||
         cp == '}';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

struct WordShape {
  std::size_t letters = 0;
  bool all_upper = true;
  bool initial_upper = false;
  bool apostrophe = false;
};

WordShape Shape(std::string_view surface) {
  WordShape w;
  bool first = true;
  for (std::size_t p = 0; p < surface.size();) {
    char32_t cp = utf8::Next(surface, p);
    if (utf8::IsApostrophe(cp)) {
      w.apostrophe = true;
      continue;
    }
    ++w.letters;
    const bool upper = utf8::IsUpper(cp);
    if (first) w.initial_upper = upper;
    if (!upper) w.all_upper = false;
    first = false;
  }
  return w;
}

// Population mean and standard deviation.
std::pair<double, double> MeanStd(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double sum = 0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(xs.size()))};
}

double Median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

const std::vector<std::string>& MetricNames() {
  static const std::vector<std::string> kNames = BuildNames();
  return kNames;
}

std::string SchemaJson() {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["sentence_length_cap"] = kSentenceLengthCap;
  j["word_length_cap"] = kWordLengthCap;
  j["metrics"] = MetricNames();
  return j.dump(2) + "\n";
}

const std::vector<std::string>& ClosedClassNames() { return kClosedClasses; }

std::vector<WordClass> DefaultClosedClasses() {
  std::vector<WordClass> out;
  for (const std::string& name : kClosedClasses) {
    auto words = ParseWordList(EmbeddedResource("closed_class/" + name + ".txt"));
    out.push_back({name, {words.begin(), words.end()}});
  }
  return out;
}

std::vector<WordClass> LoadClosedClasses(const std::filesystem::path& dir) {
  std::vector<WordClass> out;
  for (const std::string& name : kClosedClasses) {
    auto words = ParseWordList(ReadFile(dir / (name + ".txt")));
    WordClass wc{name, {}};
    for (const std::string& w : words) wc.words.insert(utf8::ToLower(w));
    out.push_back(std::move(wc));
  }
  return out;
}

FeatureVector StyloVector::ToFeatureVector() const {
  FeatureVector f;
  f.doc_id = doc_id;
  f.family = "stylo";
  f.names = MetricNames();
  f.values = values;
  return f;
}

StyloExtractor::StyloExtractor(std::vector<WordClass> classes)
    : classes_(std::move(classes)) {
  if (classes_.size() != kClosedClasses.size()) {
    throw InputError("expected " + std::to_string(kClosedClasses.size()) +
                     " closed-class lists, got " +
                     std::to_string(classes_.size()));
  }
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].name != kClosedClasses[i]) {
      throw InputError("closed-class list " + std::to_string(i) + " is '" +
                       classes_[i].name + "', expected '" +
                       kClosedClasses[i] + "'");
    }
  }
}

StyloVector StyloExtractor::Extract(std::string doc_id,
                                    const textproc::AnalyzedText& doc) const {
  const std::string_view text = doc.text;
  const auto& tokens = doc.tokens.tokens;
  const std::size_t words = doc.tokens.word_count;
  if (words == 0) {
    throw DegenerateError("style vector needs at least one word");
  }
  const std::size_t all_tokens = tokens.size();
  const std::size_t wc = doc.tokens.wc();

  // Word-level counts.
  std::unordered_map<std::string_view, std::size_t> freq;
  std::vector<double> word_lengths;
  word_lengths.reserve(words);
  std::size_t long_words = 0, short_words = 0, upper_words = 0,
              capitalized = 0, contractions = 0, ly = 0, ing = 0, ed = 0,
              repeated_words = 0, function_words = 0, pronouns = 0;
  std::vector<std::size_t> class_counts(classes_.size(), 0);
  const Token* prev = nullptr;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::kWord) {
      prev = &t;
      continue;
    }
    ++freq[t.norm];
    WordShape shape = Shape(t.Surface(text));
    word_lengths.push_back(static_cast<double>(shape.letters));
    long_words += shape.letters >= kLongWord;
    short_words += shape.letters <= kShortWord;
    upper_words += shape.all_upper && shape.letters >= 2;
    capitalized += shape.initial_upper;
    contractions += shape.apostrophe;
    ly += shape.letters >= 5 && EndsWith(t.norm, "ly");
    ing += shape.letters >= 5 && EndsWith(t.norm, "ing");
    ed += shape.letters >= 4 && EndsWith(t.norm, "ed");
    if (prev != nullptr && prev->kind == TokenKind::kWord &&
        prev->norm == t.norm) {
      ++repeated_words;
    }
    bool function = false, pronoun = false;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (classes_[c].words.contains(t.norm)) {
        ++class_counts[c];
        function = true;
        pronoun |= c >= kFirstPronoun && c <= kLastPronoun;
      }
    }
    function_words += function;
    pronouns += pronoun;
    prev = &t;
  }
  std::size_t hapax = 0;
  for (const auto& [w, n] : freq) hapax += n == 1;

  // Punctuation.
  std::size_t punct = 0, period = 0, comma = 0, qmark = 0, exclam = 0,
              colon = 0, semicolon = 0, dash = 0, bracket = 0, quote = 0,
              ellipsis = 0, other = 0, repeated_punct = 0;
  for (std::size_t i = 0; i < all_tokens; ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::kPunctuation) continue;
    ++punct;
    std::string_view s = t.Surface(text);
    std::size_t p = 0;
    const char32_t cp = utf8::Next(s, p);
    const bool after_same = i > 0 &&
                            tokens[i - 1].kind == TokenKind::kPunctuation &&
                            tokens[i - 1].end == t.begin &&
                            tokens[i - 1].norm == t.norm;
    repeated_punct += after_same;
    if (cp == '.') {
      ++period;
      // The second period of a run opens an ellipsis.
      const bool run_start = after_same && !(i > 1 &&
                             tokens[i - 2].kind == TokenKind::kPunctuation &&
                             tokens[i - 2].end == tokens[i - 1].begin &&
                             tokens[i - 2].norm == ".");
      ellipsis += run_start;
    } else if (cp == ',') {
      ++comma;
    } else if (cp == '?') {
      ++qmark;
    } else if (cp == '!') {
      ++exclam;
    } else if (cp == ':') {
      ++colon;
    } else if (cp == ';') {
      ++semicolon;
    } else if (IsDash(cp)) {
      ++dash;
    } else if (IsBracket(cp)) {
      ++bracket;
    } else if (IsQuote(cp)) {
      ++quote;
    } else if (cp == 0x2026) {
      ++ellipsis;
      ++other;
    } else {
      ++other;
    }
  }

  // Sentence-level.
  const auto ranges = textproc::SentenceTokenRanges(doc.tokens, doc.sentences);
  std::vector<double> lengths;
  std::size_t short_sents = 0, long_sents = 0, questions = 0, exclaims = 0,
              declaratives = 0, unterminated = 0, numeric = 0, initial_conj = 0,
              initial_pron = 0, initial_wh = 0;
  for (std::size_t s = 0; s < ranges.size(); ++s) {
    auto [first, last] = ranges[s];
    std::size_t len = 0;
    bool has_number = false;
    const Token* first_word = nullptr;
    char32_t terminal = 0;
    for (std::size_t i = first; i < last; ++i) {
      const Token& t = tokens[i];
      if (t.kind == TokenKind::kPunctuation) {
        std::size_t p = 0;
        char32_t cp = utf8::Next(t.Surface(text), p);
        if (cp == '.' || cp == '!' || cp == '?' || cp == 0x2026) {
          terminal = cp;
        } else if (!IsQuote(cp) && !IsBracket(cp)) {
          terminal = 0;
        }
        continue;
      }
      ++len;
      has_number |= t.kind == TokenKind::kNumber;
      if (t.kind == TokenKind::kWord && first_word == nullptr) first_word = &t;
      terminal = 0;
    }
    lengths.push_back(static_cast<double>(len));
    short_sents += len <= kShortSentence;
    long_sents += len >= kLongSentence;
    questions += terminal == '?';
    exclaims += terminal == '!';
    declaratives += terminal == '.' || terminal == 0x2026;
    unterminated += terminal == 0;
    numeric += has_number;
    if (first_word != nullptr) {
      initial_conj += classes_[kConjCoord].words.contains(first_word->norm);
      initial_wh += classes_[kWhWords].words.contains(first_word->norm);
      for (std::size_t c = kFirstPronoun; c <= kLastPronoun; ++c) {
        if (classes_[c].words.contains(first_word->norm)) {
          ++initial_pron;
          break;
        }
      }
    }
  }
  const std::size_t sentences = lengths.size();
  auto [len_mean, len_std] = MeanStd(lengths);
  auto [wlen_mean, wlen_std] = MeanStd(word_lengths);
  const double len_max =
      lengths.empty() ? 0.0 : *std::max_element(lengths.begin(), lengths.end());
  const double len_min =
      lengths.empty() ? 0.0 : *std::min_element(lengths.begin(), lengths.end());

  StyloVector out;
  out.doc_id = std::move(doc_id);
  std::vector<double>& v = out.values;
  v.reserve(MetricNames().size());
  v.push_back(Capped(len_mean, kSentenceLengthCap));
  v.push_back(Capped(Median(lengths), kSentenceLengthCap));
  v.push_back(Capped(len_max, kSentenceLengthCap));
  v.push_back(Capped(len_min, kSentenceLengthCap));
  v.push_back(Capped(len_std, kSentenceLengthCap));
  v.push_back(len_mean > 0 ? std::min(len_std / len_mean, 1.0) : 0.0);
  v.push_back(Ratio(short_sents, sentences));
  v.push_back(Ratio(long_sents, sentences));
  v.push_back(Ratio(questions, sentences));
  v.push_back(Ratio(exclaims, sentences));
  v.push_back(Ratio(declaratives, sentences));
  v.push_back(Ratio(unterminated, sentences));
  v.push_back(Ratio(freq.size(), words));
  v.push_back(Ratio(hapax, words));
  v.push_back(Ratio(numeric, sentences));
  v.push_back(Capped(wlen_mean, kWordLengthCap));
  v.push_back(Capped(wlen_std, kWordLengthCap));
  v.push_back(Ratio(long_words, words));
  v.push_back(Ratio(short_words, words));
  v.push_back(Ratio(upper_words, words));
  v.push_back(Ratio(capitalized, words));
  v.push_back(Ratio(contractions, words));
  v.push_back(Ratio(doc.tokens.number_count, wc));
  v.push_back(Ratio(punct, all_tokens));
  for (std::size_t count : {period, comma, qmark, exclam, colon, semicolon,
                            dash, bracket, quote, ellipsis, other}) {
    v.push_back(Ratio(count, all_tokens));
  }
  v.push_back(Ratio(repeated_punct, punct));
  for (std::size_t count : class_counts) v.push_back(Ratio(count, words));
  v.push_back(Ratio(function_words, words));
  v.push_back(Ratio(pronouns, words));
  v.push_back(Ratio(initial_conj, sentences));
  v.push_back(Ratio(initial_pron, sentences));
  v.push_back(Ratio(initial_wh, sentences));
  v.push_back(Ratio(repeated_words, words));
  v.push_back(Ratio(ly, words));
  v.push_back(Ratio(ing, words));
  v.push_back(Ratio(ed, words));
  v.push_back(Ratio(words - function_words, words));
  return out;
}

FeatureVector ConcatLgs(const FeatureVector& liwc,
                        const FeatureVector& grievance,
                        const StyloVector& stylo) {
  FeatureVector parts[] = {liwc, grievance, stylo.ToFeatureVector()};
  return ConcatLgs(parts);
}

FeatureVector ConcatLgs(std::span<const FeatureVector> parts) {
  static const char* kOrder[] = {"liwc", "grievance", "stylo"};
  const FeatureVector* picked[3] = {nullptr, nullptr, nullptr};
  for (const FeatureVector& part : parts) {
    auto it = std::find_if(std::begin(kOrder), std::end(kOrder),
                           [&](const char* f) { return part.family == f; });
    if (it == std::end(kOrder)) {
      throw InputError("unexpected feature family '" + part.family + "'");
    }
    const FeatureVector*& slot = picked[it - std::begin(kOrder)];
    if (slot != nullptr) {
      throw InputError("feature family '" + part.family + "' given twice");
    }
    slot = &part;
  }
  FeatureVector out;
  out.family = "lgs";
  for (int i = 0; i < 3; ++i) {
    if (picked[i] == nullptr || picked[i]->values.empty()) {
      throw InputError(std::string("missing ") + kOrder[i] + " features");
    }
    if (picked[i]->names.size() != picked[i]->values.size()) {
      throw InputError(std::string("malformed ") + kOrder[i] + " features");
    }
    if (i == 0) {
      out.doc_id = picked[i]->doc_id;
      out.word_count = picked[i]->word_count;
    } else if (picked[i]->doc_id != out.doc_id) {
      throw InputError("document id mismatch: '" + out.doc_id + "' vs '" +
                       picked[i]->doc_id + "'");
    }
    for (std::size_t k = 0; k < picked[i]->size(); ++k) {
      out.Add(std::string(kOrder[i]) + "." + picked[i]->names[k],
              picked[i]->values[k]);
    }
  }
  return out;
}

}  // namespace stylolab::stylovec
