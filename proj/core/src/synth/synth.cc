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


#include "stylolab/synth/synth.h"

#include <algorithm>
#include <array>
#include <cstdio>

#include "stylolab/common/csv.h"
#include "stylolab/common/io.h"

namespace stylolab::synth {
namespace {

using corpus::Document;
using corpus::Rating;

template <std::size_t N>
const char* Pick(Rng& rng, const std::array<const char*, N>& pool) {
  return pool[rng.UniformIndex(N)];
}

std::string Capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

// Pronounceable lowercase nonce word of two or three syllables.
std::string PseudoWord(Rng& rng) {
  static constexpr std::array<const char*, 16> kOnsets = {
      "b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z", "br", "tr"};
  static constexpr std::array<const char*, 5> kVowels = {"a", "e", "i", "o", "u"};
  static constexpr std::array<const char*, 6> kCodas = {"", "", "n", "r", "l", "sh"};
  std::string w;
  const std::size_t syllables = 2 + rng.UniformIndex(2);
  for (std::size_t i = 0; i < syllables; ++i) {
    w += Pick(rng, kOnsets);
    w += Pick(rng, kVowels);
  }
  w += Pick(rng, kCodas);
  return w;
}

constexpr std::array<const char*, 15> kSharedNouns = {
    "vaccine", "school", "election", "family", "health", "media", "economy",
    "freedom", "government", "food", "weather", "job", "community", "doctor",
    "bank"};

constexpr std::array<const char*, 20> kFormalNouns = {
    "policy", "council", "evidence", "analysis", "institution", "framework",
    "report", "minister", "region", "committee", "proposal", "legislation",
    "initiative", "assessment", "population", "authority", "strategy",
    "agency", "sector", "budget"};

constexpr std::array<const char*, 14> kFormalAdjectives = {
    "significant", "substantial", "national", "considerable", "regional",
    "economic", "comprehensive", "independent", "administrative", "public",
    "federal", "structural", "detailed", "relevant"};

constexpr std::array<const char*, 14> kFormalVerbs = {
    "indicated", "examined", "considered", "established", "announced",
    "reviewed", "proposed", "implemented", "assessed", "confirmed",
    "evaluated", "recommended", "identified", "outlined"};

constexpr std::array<const char*, 10> kPrepositions = {
    "within", "across", "throughout", "regarding", "during", "under",
    "following", "beyond", "among", "despite"};

constexpr std::array<const char*, 6> kSubordinators = {
    "although", "whereas", "because", "while", "since", "even though"};

constexpr std::array<const char*, 7> kCasualAdjectives = {
    "weird", "sketchy", "confusing", "odd", "crazy", "wild", "strange"};

// "a" or "an" before `word`, by its first letter.
std::string Article(const std::string& word) {
  return word.find_first_of("aeiou") == 0 ? "an" : "a";
}

// About ten words: "the <adj> <noun> <prep> the <noun> <verb> a <adj> <noun>".
// Each draw is its own statement; operand order of '+' is unspecified.
std::string FormalClause(Rng& rng, bool nonce) {
  auto noun = [&]() {
    return nonce && rng.Bernoulli(0.5) ? PseudoWord(rng)
                                       : std::string(Pick(rng, kFormalNouns));
  };
  std::string s = "the ";
  s += Pick(rng, kFormalAdjectives);
  s += " " + noun();
  if (rng.Bernoulli(0.7)) {
    s += " ";
    s += Pick(rng, kPrepositions);
    s += " the " + noun();
  }
  s += " ";
  s += Pick(rng, kFormalVerbs);
  const std::string adj = Pick(rng, kFormalAdjectives);
  s += " " + Article(adj) + " " + adj;
  s += " " + noun();
  if (rng.Bernoulli(0.5)) {
    s += " ";
    s += Pick(rng, kPrepositions);
    s += " the " + noun();
  }
  return s;
}

std::string FormalSentence(Rng& rng, bool nonce) {
  std::string s = Capitalize(FormalClause(rng, nonce)) + ", ";
  s += Pick(rng, kSubordinators);
  s += " " + FormalClause(rng, nonce);
  if (rng.Bernoulli(0.5)) s += ", and " + FormalClause(rng, nonce);
  return s + ".";
}

// Short second-person exclamation; `noun` fills the slot.
std::string ExclamatorySentence(std::size_t which, const std::string& noun) {
  static constexpr std::array<const char*, 14> kTemplates = {
      "You need to protect your % now!",
      "Don't let them take your %!",
      "Wake up, people, the % is next!",
      "Your % is under attack!",
      "They lied to you about the % again!",
      "Share this before they delete the % story!",
      "Stand up for your %!",
      "You deserve the truth about the %!",
      "Look at what they did to your %!",
      "Enough is enough with this %!",
      "Fight for your % today!",
      "You were warned about the %!",
      "Never trust their % promises!",
      "Tell everyone you know about the %!"};
  std::string t = kTemplates[which % kTemplates.size()];
  const std::size_t pos = t.find('%');
  return t.replace(pos, 1, noun);
}

std::string QuestioningSentence(Rng& rng, const std::string& noun) {
  const std::string adj = Pick(rng, kCasualAdjectives);
  switch (rng.UniformIndex(11)) {
    case 0: return "Why is the " + noun + " so " + adj + "?";
    case 1: return "Has anyone else noticed the " + noun + " lately?";
    case 2: return "Is it just me or is the " + noun + " kind of " + adj + "?";
    case 3: return "What do you guys think about the " + noun + "?";
    case 4: return "I'm not sure what to make of the " + noun + " tbh.";
    case 5: return "Does anyone know where the " + noun + " info came from?";
    case 6: return "How are we supposed to trust the " + noun + "?";
    case 7: return "I don't really get the " + noun + " thing.";
    case 8: return "Who decided the " + noun + " rules?";
    case 9: return "Can someone explain the " + noun + " stuff?";
    default: return "Honestly it's " + adj + " how the " + noun + " works.";
  }
}

std::string Join(const std::vector<std::string>& sentences) {
  std::string out;
  for (const std::string& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

std::string StyleFlavor(std::string_view style, Rng& rng) {
  const std::string noun = Pick(rng, kSharedNouns);
  char num[16];
  std::snprintf(num, sizeof(num), "%d", 10 + static_cast<int>(rng.UniformIndex(80)));
  if (style == "casual") {
    static constexpr std::array<const char*, 4> k = {
        "haha that's just how it goes.", "Anyway, not a big deal lol.",
        "Kinda funny when you think about it.", "Just saying, no offence."};
    return Pick(rng, k);
  }
  if (style == "empowerment") {
    static constexpr std::array<const char*, 4> k = {
        "Together we can rebuild our ", "We are stronger than they think about our ",
        "Stand tall and speak up for the ", "Our voices will protect the "};
    return std::string(Pick(rng, k)) + noun + "!";
  }
  if (style == "expert") {
    return "According to a 2021 study, " + std::string(num) + "% of " + noun +
           " cases were reviewed by independent researchers.";
  }
  if (style == "clickbait") {
    return "You won't believe what this " + noun + " trick does!";
  }
  return "I feel so close to all of you and my heart goes out to every " +
         noun + " here.";
}

// Draws an index with probability proportional to weights.
std::size_t Weighted(Rng& rng, std::span<const double> weights) {
  double total = 0;
  for (double w : weights) total += w;
  double u = rng.UniformDouble() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  return weights.size() - 1;
}

double FactInclusion(Rating r) {
  switch (r) {
    case Rating::kExtremeLeft: return 0.9;
    case Rating::kModerateLeft: return 0.85;
    case Rating::kCenter: return 0.75;
    case Rating::kModerateRight: return 0.6;
    case Rating::kExtremeRight: return 0.4;
  }
  return 0.75;
}

std::string Identifier(const char* prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%05zu", prefix, n);
  return buf;
}

// Article-unique sentences in the publisher's register. Exclamatory
// templates are drawn from `templates` so that no two articles of one story
// repeat a template.
std::vector<std::string> Fillers(Rng& rng, Rating rating,
                                 std::vector<std::size_t>& templates) {
  std::vector<std::string> out;
  const std::size_t n = 2 + rng.UniformIndex(3);
  for (std::size_t i = 0; i < n; ++i) {
    if (rating == Rating::kExtremeRight && !templates.empty()) {
      out.push_back(ExclamatorySentence(templates.back(), PseudoWord(rng)));
      templates.pop_back();
    } else {
      out.push_back(FormalSentence(rng, true));
    }
  }
  return out;
}

struct Event {
  std::string place;
  std::string actor;
  std::vector<std::string> words;  // headline vocabulary
};

Event NewEvent(Rng& rng) {
  Event e;
  e.place = Capitalize(PseudoWord(rng));
  e.actor = Capitalize(PseudoWord(rng));
  e.actor += " " + Capitalize(PseudoWord(rng));
  for (int i = 0; i < 4; ++i) e.words.push_back(PseudoWord(rng));
  return e;
}

std::string Headline(const Event& e, Rng& rng) {
  std::vector<std::string> w = e.words;
  if (rng.Bernoulli(0.5)) w[rng.UniformIndex(w.size())] = PseudoWord(rng);
  return e.place + " " + Capitalize(w[0]) + " " + w[1] + " sparks " + w[2] +
         " " + w[3] + " debate";
}

std::string Lede(const Event& e, Rng& rng) {
  static constexpr std::array<const char*, 4> kDays = {"Monday", "Tuesday", "Thursday", "Friday"};
  return "The " + e.words[0] + " " + e.words[1] + " in " + e.place +
         " drew " + e.words[2] + " " + e.words[3] + " attention on " +
         Pick(rng, kDays) + ".";
}

// Nonce words specific to one fact of an event.
std::vector<std::string> FactWords(Rng& rng) {
  std::vector<std::string> w;
  for (int i = 0; i < 6; ++i) w.push_back(PseudoWord(rng));
  return w;
}

std::string FactSentence(const Event& e, std::vector<std::string> w,
                         int number, Rng& rng) {
  if (rng.Bernoulli(0.5)) w[rng.UniformIndex(w.size())] = PseudoWord(rng);
  return e.actor + " said the " + w[0] + " " + w[1] + " near " + e.place +
         " " + w[2] + " " + std::to_string(number) + " " + w[3] + " " + w[4] +
         " before the " + w[5] + ".";
}

Document NewsArticle(std::string id, const PublisherSpec& pub,
                     const std::string& topic, corpus::Timestamp t,
                     std::string title, std::vector<std::string> body) {
  Document d;
  d.id = std::move(id);
  d.kind = corpus::DocumentKind::kArticle;
  d.publisher = pub.domain;
  d.topic = topic;
  d.published_at = t;
  d.title = std::move(title);
  d.text = Join(body);
  return d;
}

// One article about its own event, outside any story.
Document StandaloneArticle(std::string id, const PublisherSpec& pub,
                           const std::string& topic, corpus::Timestamp t,
                           Rng& rng, bool consumption) {
  Event e = NewEvent(rng);
  std::vector<std::size_t> templates(14);
  for (std::size_t i = 0; i < templates.size(); ++i) templates[i] = i;
  rng.Shuffle(std::span<std::size_t>(templates));
  std::vector<std::string> body = {Lede(e, rng)};
  const std::size_t facts = 2 + rng.UniformIndex(3);
  for (std::size_t f = 0; f < facts; ++f) {
    std::vector<std::string> words = FactWords(rng);
    const int number = static_cast<int>(2 + rng.UniformIndex(500));
    body.push_back(FactSentence(e, std::move(words), number, rng));
  }
  for (std::string& s : Fillers(rng, pub.rating, templates)) body.push_back(std::move(s));
  if (consumption && rng.Bernoulli(0.35)) {
    body.push_back(ExclamatorySentence(templates.back(), Pick(rng, kSharedNouns)));
  }
  rng.Shuffle(std::span<std::string>(body).subspan(1));
  std::string title = Headline(e, rng);
  return NewsArticle(std::move(id), pub, topic, t, std::move(title), std::move(body));
}

}  // namespace

const std::vector<PublisherSpec>& Publishers() {
  static const std::vector<PublisherSpec> kPublishers = {
      {"redharbour.example", Rating::kExtremeLeft},
      {"eastgazette.example", Rating::kModerateLeft},
      {"citizenpost.example", Rating::kModerateLeft},
      {"harbourtimes.example", Rating::kModerateLeft},
      {"thedaily.example", Rating::kModerateLeft},
      {"nationalwire.example", Rating::kCenter},
      {"metroherald.example", Rating::kCenter},
      {"plainreport.example", Rating::kCenter},
      {"ledgernews.example", Rating::kCenter},
      {"westernsun.example", Rating::kModerateRight},
      {"marketcourier.example", Rating::kModerateRight},
      {"heartlandnews.example", Rating::kModerateRight},
      {"frontiervoice.example", Rating::kModerateRight},
      {"truthbeacon.example", Rating::kExtremeRight},
      {"patriotsignal.example", Rating::kExtremeRight},
      {"ironflag.example", Rating::kExtremeRight},
  };
  return kPublishers;
}

std::string PublishersCsv() {
  CsvWriter w;
  w.AddRow({"domain", "rating"});
  for (const PublisherSpec& p : Publishers()) {
    w.AddRow({p.domain, std::string(corpus::ToString(p.rating))});
  }
  return w.str();
}

std::string GeneratePost(PostStyle style, Rng& rng) {
  std::vector<std::string> s;
  switch (style) {
    case PostStyle::kFormal: {
      const std::size_t n = 2 + rng.UniformIndex(3);
      for (std::size_t i = 0; i < n; ++i) s.push_back(FormalSentence(rng, false));
      break;
    }
    case PostStyle::kExclamatory: {
      const std::size_t n = 3 + rng.UniformIndex(4);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string noun = Pick(rng, kSharedNouns);
        if (rng.Bernoulli(0.2)) {
          s.push_back(QuestioningSentence(rng, noun));
        } else {
          s.push_back(ExclamatorySentence(rng.UniformIndex(14), noun));
        }
      }
      break;
    }
    case PostStyle::kQuestioning: {
      const std::size_t n = 3 + rng.UniformIndex(4);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string noun = Pick(rng, kSharedNouns);
        if (rng.Bernoulli(0.15)) {
          s.push_back(ExclamatorySentence(rng.UniformIndex(14), noun));
        } else {
          s.push_back(QuestioningSentence(rng, noun));
        }
      }
      break;
    }
  }
  return Join(s);
}

std::vector<Document> GenerateGroupPosts(std::size_t per_class,
                                         std::uint64_t seed) {
  struct Group {
    corpus::GroupLabel label;
    PostStyle style;
  };
  static constexpr Group kGroups[] = {
      {corpus::GroupLabel::kNormal, PostStyle::kFormal},
      {corpus::GroupLabel::kFarRight, PostStyle::kExclamatory},
      {corpus::GroupLabel::kAntivax, PostStyle::kQuestioning}};
  std::vector<Document> out;
  for (std::size_t g = 0; g < 3; ++g) {
    Rng rng(DeriveSeed(seed, g));
    for (std::size_t i = 0; i < per_class; ++i) {
      Document d;
      d.kind = corpus::DocumentKind::kPost;
      d.id = Identifier(("post-" + std::string(corpus::ToString(kGroups[g].label))).c_str(), i);
      d.text = GeneratePost(kGroups[g].style, rng);
      d.group_label = kGroups[g].label;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<Document> GenerateStyledPosts(std::uint64_t seed) {
  struct Cell {
    corpus::GroupLabel group;
    corpus::StyleLabel style;
    std::size_t count;
  };
  using corpus::GroupLabel;
  using corpus::StyleLabel;
  static constexpr Cell kCells[] = {
      {GroupLabel::kFarRight, StyleLabel::kCasual, 11},
      {GroupLabel::kFarRight, StyleLabel::kEmpowerment, 21},
      {GroupLabel::kFarRight, StyleLabel::kClickbait, 1},
      {GroupLabel::kFarRight, StyleLabel::kExpert, 13},
      {GroupLabel::kFarRight, StyleLabel::kIntimacy, 1},
      {GroupLabel::kAntivax, StyleLabel::kCasual, 11},
      {GroupLabel::kAntivax, StyleLabel::kEmpowerment, 4},
      {GroupLabel::kAntivax, StyleLabel::kClickbait, 1}};
  Rng rng(seed);
  std::vector<Document> out;
  std::size_t n = 0;
  for (const Cell& c : kCells) {
    for (std::size_t i = 0; i < c.count; ++i) {
      const PostStyle base = c.group == GroupLabel::kFarRight
                                 ? PostStyle::kExclamatory
                                 : PostStyle::kQuestioning;
      std::vector<std::string> s = {GeneratePost(base, rng)};
      const std::size_t flavor = 2 + rng.UniformIndex(2);
      for (std::size_t f = 0; f < flavor; ++f) {
        s.push_back(StyleFlavor(corpus::ToString(c.style), rng));
      }
      Document d;
      d.kind = corpus::DocumentKind::kPost;
      d.id = Identifier("post-styled", n++);
      d.text = Join(s);
      d.group_label = c.group;
      d.style_label = c.style;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<Document> GenerateNews(const NewsOptions& options,
                                   std::uint64_t seed) {
  Rng rng(seed);
  const auto& pubs = Publishers();
  const auto& topics = corpus::CanonicalTopics();
  std::vector<Document> out;
  std::size_t next_id = 0;
  constexpr corpus::Timestamp kDay = 86400;

  for (std::size_t ti = 0; ti < topics.size(); ++ti) {
    for (std::size_t s = 0; s < options.stories_per_topic; ++s) {
      // Stories of one topic start a week apart so windows never overlap.
      const corpus::Timestamp t0 = options.start +
          static_cast<corpus::Timestamp>(s) * 7 * kDay +
          static_cast<corpus::Timestamp>(rng.UniformIndex(2 * kDay));
      Event e = NewEvent(rng);
      const std::size_t facts = 4 + rng.UniformIndex(3);
      std::vector<std::vector<std::string>> fact_words;
      std::vector<int> numbers;
      for (std::size_t f = 0; f < facts; ++f) {
        fact_words.push_back(FactWords(rng));
        numbers.push_back(static_cast<int>(2 + rng.UniformIndex(500)));
      }
      std::vector<std::size_t> order(pubs.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      rng.Shuffle(std::span<std::size_t>(order));
      std::vector<std::size_t> templates(14);
      for (std::size_t i = 0; i < templates.size(); ++i) templates[i] = i;
      rng.Shuffle(std::span<std::size_t>(templates));

      const std::size_t articles =
          options.min_articles +
          rng.UniformIndex(options.max_articles - options.min_articles + 1);
      for (std::size_t a = 0; a < articles; ++a) {
        const PublisherSpec& pub = pubs[order[a]];
        std::vector<std::string> body;
        for (std::size_t f = 0; f < facts; ++f) {
          if (rng.Bernoulli(FactInclusion(pub.rating))) {
            body.push_back(FactSentence(e, fact_words[f], numbers[f], rng));
          }
        }
        for (std::string& f : Fillers(rng, pub.rating, templates)) body.push_back(std::move(f));
        rng.Shuffle(std::span<std::string>(body));
        body.insert(body.begin(), Lede(e, rng));
        const corpus::Timestamp t =
            t0 + static_cast<corpus::Timestamp>(rng.UniformIndex(36 * 3600));
        out.push_back(NewsArticle(Identifier("news", next_id++), pub, topics[ti],
                                  t, Headline(e, rng), std::move(body)));
      }
    }
    for (std::size_t k = 0; k < options.singletons_per_topic; ++k) {
      const PublisherSpec& pub = pubs[rng.UniformIndex(pubs.size())];
      const corpus::Timestamp t = options.start +
          static_cast<corpus::Timestamp>(rng.UniformIndex(40 * kDay));
      out.push_back(StandaloneArticle(Identifier("news", next_id++), pub,
                                      topics[ti], t, rng, false));
    }
  }

  // Far-right users mostly share mainstream and left-leaning outlets.
  std::vector<double> weights;
  for (const PublisherSpec& p : pubs) {
    weights.push_back(p.rating == Rating::kExtremeRight ? 0.5 : 1.0);
  }
  for (std::size_t i = 0; i < options.shared_articles; ++i) {
    const PublisherSpec& pub = pubs[Weighted(rng, weights)];
    const std::string& topic = topics[rng.UniformIndex(topics.size())];
    const corpus::Timestamp t = options.start +
        static_cast<corpus::Timestamp>(rng.UniformIndex(40 * kDay));
    Document d = StandaloneArticle(Identifier("shared", i), pub, topic, t, rng, true);
    d.origin = corpus::Origin::kShared;
    out.push_back(std::move(d));
  }
  return out;
}

SyntheticCorpus GenerateCorpus(std::uint64_t seed) {
  SyntheticCorpus c;
  c.articles = GenerateNews({}, DeriveSeed(seed, 1));
  c.posts = GenerateGroupPosts(1000, DeriveSeed(seed, 2));
  for (Document& d : GenerateStyledPosts(DeriveSeed(seed, 3))) {
    c.posts.push_back(std::move(d));
  }
  c.publishers_csv = PublishersCsv();
  return c;
}

void WriteCorpus(const SyntheticCorpus& c, const std::filesystem::path& dir) {
  WriteFile(dir / "articles.jsonl",
            corpus::SerializeDocuments(corpus::DocumentSet(c.articles)));
  WriteFile(dir / "posts.jsonl",
            corpus::SerializeDocuments(corpus::DocumentSet(c.posts)));
  WriteFile(dir / "publishers.csv", c.publishers_csv);
}

}  // namespace stylolab::synth
