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


#include "config.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/parallel.h"
#include "toml.hpp"

namespace stylolab::cli {
namespace {

enum class Type { kInt, kDouble, kBool, kString, kPath, kList };

struct KeySpec {
  std::string key;
  Type type;
  std::optional<ConfigValue> def;  // absent: the key is optional
  std::vector<std::string> choices;  // strings and lists; empty = free
};

using Strings = std::vector<std::string>;

const std::vector<KeySpec>& Schema() {
  static const std::vector<KeySpec> specs = [] {
    const Strings families = {"lgs", "liwc", "grievance", "stylo"};
    Strings classify_families = families;
    classify_families.push_back("embedding");
    std::vector<KeySpec> s = {
        {"run.seed", Type::kInt, std::nullopt, {}},
        {"run.out", Type::kPath, std::string("stylolab-out"), {}},
        {"run.workers", Type::kInt, std::int64_t{0}, {}},
        {"input.articles", Type::kPath, std::string(), {}},
        {"input.posts", Type::kPath, std::string(), {}},
        {"input.publishers", Type::kPath, std::string(), {}},
        {"input.liwc_lexicon", Type::kPath, std::string(), {}},
        {"input.liwc_composites", Type::kPath, std::string(), {}},
        {"input.liwc_blocklist", Type::kPath, std::string(), {}},
        {"input.grievance_lexicon", Type::kPath, std::string(), {}},
        {"input.closed_classes", Type::kPath, std::string(), {}},
        {"input.embeddings", Type::kPath, std::string(), {}},
        {"trust.theta_story", Type::kDouble, 0.35, {}},
        {"trust.theta_detail", Type::kDouble, 0.60, {}},
        {"trust.window_hours", Type::kDouble, 72.0, {}},
        {"trust.lead_sentences", Type::kInt, std::int64_t{3}, {}},
        {"compare.alpha", Type::kDouble, 0.05, {}},
        {"compare.correction", Type::kString, std::string("bonferroni"),
         {"bonferroni", "none"}},
        {"compare.m", Type::kInt, std::int64_t{0}, {}},
        {"compare.test", Type::kString, std::string("welch"),
         {"welch", "student"}},
        {"compare.family", Type::kString, std::string("liwc"), families},
        {"compare.by", Type::kList, Strings{"far_right", "origin"},
         {"far_right", "origin", "group"}},
        {"compare.topics", Type::kList, Strings{"all"}, {}},
        {"classify.tasks", Type::kList, Strings{"groups", "styles", "prodcons"},
         {"groups", "styles", "prodcons"}},
        {"classify.models", Type::kList, Strings{"rforest", "logreg"},
         {"rforest", "logreg", "linsvm"}},
        {"classify.features", Type::kList, Strings{"lgs"}, classify_families},
        {"classify.groups.per_class", Type::kInt, std::int64_t{1000}, {}},
        {"classify.groups.folds", Type::kInt, std::int64_t{5}, {}},
        {"classify.styles.labels", Type::kList,
         Strings{"casual", "empowerment", "expert"},
         {"casual", "empowerment", "clickbait", "expert", "intimacy"}},
        {"classify.styles.folds", Type::kInt, std::int64_t{2}, {}},
        {"classify.styles.trees", Type::kInt, std::int64_t{8}, {}},
        {"classify.styles.max_depth", Type::kInt, std::int64_t{3}, {}},
        {"classify.prodcons.per_class", Type::kInt, std::int64_t{0}, {}},
        {"classify.prodcons.folds", Type::kInt, std::int64_t{10}, {}},
        {"classify.rforest.trees", Type::kInt, std::int64_t{100}, {}},
        {"classify.rforest.max_depth", Type::kInt, std::int64_t{0}, {}},
        {"classify.rforest.min_samples_split", Type::kInt, std::int64_t{2}, {}},
        {"classify.rforest.max_features", Type::kInt, std::int64_t{0}, {}},
        {"classify.rforest.bootstrap", Type::kBool, true, {}},
        {"classify.logreg.l2", Type::kDouble, 1e-2, {}},
        {"classify.logreg.tolerance", Type::kDouble, 1e-6, {}},
        {"classify.logreg.max_iterations", Type::kInt, std::int64_t{5000}, {}},
        {"classify.linsvm.lambda", Type::kDouble, 1e-3, {}},
        {"classify.linsvm.epochs", Type::kInt, std::int64_t{30}, {}},
    };
    std::sort(s.begin(), s.end(),
              [](const KeySpec& a, const KeySpec& b) { return a.key < b.key; });
    return s;
  }();
  return specs;
}

const KeySpec& Spec(const std::string& key) {
  for (const KeySpec& s : Schema()) {
    if (s.key == key) return s;
  }
  throw InputError("unknown config key '" + key + "'");
}

std::string_view TypeName(Type t) {
  switch (t) {
    case Type::kInt: return "an integer";
    case Type::kDouble: return "a number";
    case Type::kBool: return "a boolean";
    case Type::kString: return "a string";
    case Type::kPath: return "a path";
    case Type::kList: return "a list of strings";
  }
  return "?";
}

[[noreturn]] void TypeMismatch(const KeySpec& spec) {
  throw InputError("config key '" + spec.key + "' must be " +
                   std::string(TypeName(spec.type)));
}

void CheckChoices(const KeySpec& spec, const ConfigValue& v) {
  if (spec.choices.empty()) return;
  auto check = [&](const std::string& s) {
    if (std::find(spec.choices.begin(), spec.choices.end(), s) ==
        spec.choices.end()) {
      std::string allowed;
      for (const std::string& c : spec.choices) {
        allowed += (allowed.empty() ? "" : ", ") + c;
      }
      throw InputError("config key '" + spec.key + "' has invalid value '" +
                       s + "' (allowed: " + allowed + ")");
    }
  };
  if (const auto* s = std::get_if<std::string>(&v)) check(*s);
  if (const auto* l = std::get_if<Strings>(&v)) {
    for (const std::string& s : *l) check(s);
  }
}

std::string ResolvePath(const std::string& raw, const fs::path& base) {
  if (raw.empty()) return raw;
  fs::path p(raw);
  if (p.is_relative()) p = base / p;
  return fs::absolute(p).lexically_normal().string();
}

// A value read from a TOML or JSON file, before coercion to the key's type.
struct Incoming {
  std::optional<std::int64_t> i;
  std::optional<double> d;
  std::optional<bool> b;
  std::optional<std::string> s;
  std::optional<Strings> list;
};

ConfigValue Coerce(const KeySpec& spec, const Incoming& in,
                   const fs::path& base) {
  switch (spec.type) {
    case Type::kInt:
      if (in.i) return *in.i;
      break;
    case Type::kDouble:
      if (in.d) return *in.d;
      if (in.i) return static_cast<double>(*in.i);
      break;
    case Type::kBool:
      if (in.b) return *in.b;
      break;
    case Type::kString:
      if (in.s) return *in.s;
      break;
    case Type::kPath:
      if (in.s) return ResolvePath(*in.s, base);
      break;
    case Type::kList:
      if (in.list) return *in.list;
      break;
  }
  TypeMismatch(spec);
}

ConfigValue ParseOverride(const KeySpec& spec, const std::string& raw) {
  const std::string_view text = TrimAscii(raw);
  auto parse_number = [&](auto& v) {
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      TypeMismatch(spec);
    }
  };
  switch (spec.type) {
    case Type::kInt: {
      std::int64_t v = 0;
      parse_number(v);
      return v;
    }
    case Type::kDouble: {
      double v = 0;
      parse_number(v);
      return v;
    }
    case Type::kBool:
      if (text == "true" || text == "1") return true;
      if (text == "false" || text == "0") return false;
      TypeMismatch(spec);
    case Type::kString:
      return std::string(text);
    case Type::kPath:
      return ResolvePath(std::string(text), fs::current_path());
    case Type::kList: {
      Strings out;
      std::stringstream ss{std::string(text)};
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::string_view t = TrimAscii(item);
        if (!t.empty()) out.emplace_back(t);
      }
      return out;
    }
  }
  TypeMismatch(spec);
}

void FlattenToml(const toml::table& table, const std::string& prefix,
                 const fs::path& base, std::map<std::string, ConfigValue>& out) {
  for (const auto& [k, node] : table) {
    const std::string key = prefix + std::string(k.str());
    if (const toml::table* sub = node.as_table()) {
      FlattenToml(*sub, key + ".", base, out);
      continue;
    }
    const KeySpec& spec = Spec(key);
    Incoming in;
    if (auto v = node.value_exact<std::int64_t>()) in.i = *v;
    if (auto v = node.value_exact<double>()) in.d = *v;
    if (auto v = node.value_exact<bool>()) in.b = *v;
    if (auto v = node.value_exact<std::string>()) in.s = *v;
    if (const toml::array* arr = node.as_array()) {
      Strings list;
      for (const toml::node& e : *arr) {
        auto s = e.value_exact<std::string>();
        if (!s) TypeMismatch(spec);
        list.push_back(*s);
      }
      in.list = std::move(list);
    }
    out[key] = Coerce(spec, in, base);
  }
}

void FlattenJson(const nlohmann::json& obj, const std::string& prefix,
                 const fs::path& base, std::map<std::string, ConfigValue>& out) {
  for (const auto& [k, v] : obj.items()) {
    const std::string key = prefix + k;
    if (v.is_object()) {
      FlattenJson(v, key + ".", base, out);
      continue;
    }
    const KeySpec& spec = Spec(key);
    Incoming in;
    if (v.is_number_integer()) in.i = v.get<std::int64_t>();
    if (v.is_number_float()) in.d = v.get<double>();
    if (v.is_boolean()) in.b = v.get<bool>();
    if (v.is_string()) in.s = v.get<std::string>();
    if (v.is_array()) {
      Strings list;
      for (const auto& e : v) {
        if (!e.is_string()) TypeMismatch(spec);
        list.push_back(e.get<std::string>());
      }
      in.list = std::move(list);
    }
    out[key] = Coerce(spec, in, base);
  }
}

std::int64_t GetInt(const std::map<std::string, ConfigValue>& v,
                    const std::string& key, std::int64_t min) {
  std::int64_t x = std::get<std::int64_t>(v.at(key));
  if (x < min) {
    throw InputError("config key '" + key + "' must be at least " +
                     std::to_string(min));
  }
  return x;
}

double GetDouble(const std::map<std::string, ConfigValue>& v,
                 const std::string& key, double lo, double hi) {
  double x = std::get<double>(v.at(key));
  if (!(x >= lo && x <= hi)) {
    throw InputError("config key '" + key + "' must lie in [" +
                     FormatDouble(lo) + ", " + FormatDouble(hi) + "]");
  }
  return x;
}

const std::string& GetString(const std::map<std::string, ConfigValue>& v,
                             const std::string& key) {
  return std::get<std::string>(v.at(key));
}

const Strings& GetList(const std::map<std::string, ConfigValue>& v,
                       const std::string& key) {
  return std::get<Strings>(v.at(key));
}

int ResolveWorkers(std::int64_t configured) {
  if (configured == 0) return DefaultWorkerCount();
  int n = static_cast<int>(std::min<std::int64_t>(configured, 1024));
  if (std::getenv("STYLOLAB_THREADS")) n = std::min(n, DefaultWorkerCount());
  return n;
}

nlohmann::ordered_json ToJson(const ConfigValue& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json { return x; }, v);
}

}  // namespace

std::vector<std::string> ConfigKeys() {
  std::vector<std::string> keys;
  for (const KeySpec& s : Schema()) keys.push_back(s.key);
  return keys;
}

nlohmann::ordered_json RunConfig::Snapshot() const {
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  for (const auto& [key, value] : values) {
    nlohmann::ordered_json* node = &root;
    std::size_t start = 0;
    while (true) {
      std::size_t dot = key.find('.', start);
      if (dot == std::string::npos) {
        (*node)[key.substr(start)] = ToJson(value);
        break;
      }
      node = &(*node)[key.substr(start, dot - start)];
      start = dot + 1;
    }
  }
  return root;
}

std::uint64_t RunConfig::RequireSeed(const std::string& command) const {
  if (!seed) {
    throw InputError("command '" + command +
                     "' is stochastic and needs a seed: set run.seed or "
                     "pass --seed");
  }
  return *seed;
}

RunConfig LoadConfig(
    const std::optional<fs::path>& file,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::map<std::string, ConfigValue> values;
  for (const KeySpec& s : Schema()) {
    if (s.def) values[s.key] = *s.def;
  }
  if (file) {
    const std::string text = ReadFile(*file);
    const fs::path base = fs::absolute(*file).parent_path();
    if (file->extension() == ".json") {
      nlohmann::json manifest;
      try {
        manifest = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw InputError(file->string() + ": invalid JSON: " + e.what());
      }
      if (!manifest.is_object() || !manifest.contains("config") ||
          !manifest["config"].is_object()) {
        throw InputError(file->string() + ": no \"config\" object");
      }
      FlattenJson(manifest["config"], "", base, values);
    } else {
      toml::table table;
      try {
        table = toml::parse(text, file->string());
      } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << file->string() << ":" << e.source().begin.line << ": "
            << e.description();
        throw InputError(msg.str());
      }
      FlattenToml(table, "", base, values);
    }
  }
  for (const auto& [key, raw] : overrides) {
    const KeySpec& spec = Spec(key);
    values[key] = ParseOverride(spec, raw);
  }
  for (const KeySpec& s : Schema()) {
    if (auto it = values.find(s.key); it != values.end()) {
      CheckChoices(s, it->second);
    }
  }

  RunConfig c;
  if (values.contains("run.seed")) {
    c.seed = static_cast<std::uint64_t>(GetInt(values, "run.seed", 0));
  }
  c.out = std::get<std::string>(values.at("run.out"));
  if (c.out.empty()) throw InputError("config key 'run.out' is empty");
  c.workers = ResolveWorkers(GetInt(values, "run.workers", 0));

  InputPaths& in = c.input;
  const std::pair<const char*, fs::path*> paths[] = {
      {"input.articles", &in.articles},
      {"input.posts", &in.posts},
      {"input.publishers", &in.publishers},
      {"input.liwc_lexicon", &in.liwc_lexicon},
      {"input.liwc_composites", &in.liwc_composites},
      {"input.liwc_blocklist", &in.liwc_blocklist},
      {"input.grievance_lexicon", &in.grievance_lexicon},
      {"input.closed_classes", &in.closed_classes},
      {"input.embeddings", &in.embeddings}};
  for (const auto& [key, dst] : paths) {
    *dst = GetString(values, key);
    if (!dst->empty() && !fs::exists(*dst)) {
      throw InputError(std::string("config key '") + key +
                       "' names a missing path: " + dst->string());
    }
  }

  c.trust.theta_story = GetDouble(values, "trust.theta_story", 1e-9, 1);
  c.trust.theta_detail = GetDouble(values, "trust.theta_detail", 1e-9, 1);
  c.trust.window_seconds = static_cast<corpus::Timestamp>(
      GetDouble(values, "trust.window_hours", 0, 1e6) * 3600.0);
  c.trust.lead_sentences =
      static_cast<std::size_t>(GetInt(values, "trust.lead_sentences", 0));
  c.trust.workers = c.workers;

  CompareSettings& cmp = c.compare;
  cmp.options.alpha = GetDouble(values, "compare.alpha", 1e-12, 1);
  cmp.options.correction = GetString(values, "compare.correction") == "none"
                               ? stats::Correction::kNone
                               : stats::Correction::kBonferroni;
  if (std::int64_t m = GetInt(values, "compare.m", 0); m > 0) {
    cmp.options.comparisons = static_cast<std::size_t>(m);
  }
  cmp.options.form = GetString(values, "compare.test") == "student"
                         ? stats::TTestForm::kStudent
                         : stats::TTestForm::kWelch;
  cmp.options.workers = c.workers;
  cmp.family = GetString(values, "compare.family");
  cmp.by = GetList(values, "compare.by");
  cmp.topics = GetList(values, "compare.topics");
  if (cmp.topics.empty()) {
    throw InputError("config key 'compare.topics' is empty; use \"all\" to "
                     "pool every topic");
  }

  ClassifySettings& cl = c.classify;
  cl.tasks = GetList(values, "classify.tasks");
  for (const std::string& m : GetList(values, "classify.models")) {
    cl.models.push_back(*learn::ParseModelKind(m));
  }
  cl.families = GetList(values, "classify.features");
  learn::Hyperparams& hp = cl.params;
  hp.forest.trees =
      static_cast<int>(GetInt(values, "classify.rforest.trees", 1));
  hp.forest.max_depth =
      static_cast<int>(GetInt(values, "classify.rforest.max_depth", 0));
  hp.forest.min_samples_split = static_cast<std::size_t>(
      GetInt(values, "classify.rforest.min_samples_split", 2));
  hp.forest.max_features = static_cast<std::size_t>(
      GetInt(values, "classify.rforest.max_features", 0));
  hp.forest.bootstrap = std::get<bool>(values.at("classify.rforest.bootstrap"));
  hp.logreg.l2 = GetDouble(values, "classify.logreg.l2", 0, 1e6);
  hp.logreg.tolerance = GetDouble(values, "classify.logreg.tolerance", 0, 1);
  hp.logreg.max_iterations =
      static_cast<int>(GetInt(values, "classify.logreg.max_iterations", 1));
  hp.svm.lambda = GetDouble(values, "classify.linsvm.lambda", 1e-12, 1e6);
  hp.svm.epochs = static_cast<int>(GetInt(values, "classify.linsvm.epochs", 1));
  cl.styles_params = hp;
  cl.styles_params.forest.trees =
      static_cast<int>(GetInt(values, "classify.styles.trees", 1));
  cl.styles_params.forest.max_depth =
      static_cast<int>(GetInt(values, "classify.styles.max_depth", 0));
  cl.groups_per_class = static_cast<std::size_t>(
      GetInt(values, "classify.groups.per_class", 1));
  cl.groups_folds =
      static_cast<std::size_t>(GetInt(values, "classify.groups.folds", 2));
  cl.styles = GetList(values, "classify.styles.labels");
  cl.styles_folds =
      static_cast<std::size_t>(GetInt(values, "classify.styles.folds", 2));
  cl.prodcons_per_class = static_cast<std::size_t>(
      GetInt(values, "classify.prodcons.per_class", 0));
  cl.prodcons_folds =
      static_cast<std::size_t>(GetInt(values, "classify.prodcons.folds", 2));

  values.erase("run.out");
  c.values = std::move(values);
  return c;
}

}  // namespace stylolab::cli
