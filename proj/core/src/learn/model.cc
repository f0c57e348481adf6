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


#include "stylolab/learn/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "stylolab/common/error.h"
#include "stylolab/common/parallel.h"
#include "stylolab/common/random.h"

namespace stylolab::learn {
namespace {

using nlohmann::json;

void CheckTrainable(const Dataset& data) {
  data.Validate();
  std::size_t present = 0;
  for (std::size_t c : data.ClassCounts()) present += c > 0;
  if (present < 2) {
    throw DegenerateError("training needs rows from at least two classes");
  }
  if (data.cols() == 0) throw InputError("training needs at least one feature");
}

// Row scores for a linear model on standardized row-major x.
void LinearScores(std::span<const double> row, std::size_t classes,
                  std::span<const double> w, std::vector<double>& out) {
  const std::size_t p = row.size();
  out.assign(classes, 0.0);
  for (std::size_t k = 0; k < classes; ++k) {
    const double* wk = w.data() + k * (p + 1);
    double z = wk[p];
    for (std::size_t j = 0; j < p; ++j) z += wk[j] * row[j];
    out[k] = z;
  }
}

void SoftmaxInPlace(std::vector<double>& z) {
  const double m = *std::max_element(z.begin(), z.end());
  double sum = 0;
  for (double& v : z) sum += (v = std::exp(v - m));
  for (double& v : z) v /= sum;
}

// L-BFGS with ten correction pairs and Armijo backtracking from a unit
// step. Falls back to the negative gradient when the quasi-Newton direction
// is not a descent direction.
void TrainLogReg(const Dataset& data, TrainedModel& model) {
  model.standardizer = Standardizer::Fit(data.x);
  const std::vector<double> x = model.standardizer.Apply(data.x);
  const std::size_t p = data.cols(), k = data.classes.size();
  const LogRegParams& lp = model.params.logreg;
  constexpr std::size_t kMemory = 10;
  const std::size_t dim = k * (p + 1);
  auto dot = [dim](const std::vector<double>& a, const std::vector<double>& b) {
    double v = 0;
    for (std::size_t i = 0; i < dim; ++i) v += a[i] * b[i];
    return v;
  };
  std::vector<double> w(dim, 0.0), grad, trial(dim), trial_grad, dir(dim);
  std::vector<std::vector<double>> s_hist, y_hist;
  std::vector<double> rho_hist;
  double loss = SoftmaxLoss(x, p, data.y, k, w, lp.l2, &grad);
  for (int it = 0; it < lp.max_iterations; ++it) {
    if (std::sqrt(dot(grad, grad)) < lp.tolerance) break;
    // Two-loop recursion: dir = -H * grad.
    dir = grad;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t h = s_hist.size(); h-- > 0;) {
      alpha[h] = rho_hist[h] * dot(s_hist[h], dir);
      for (std::size_t i = 0; i < dim; ++i) dir[i] -= alpha[h] * y_hist[h][i];
    }
    if (!s_hist.empty()) {
      const double gamma =
          dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
      for (double& v : dir) v *= gamma;
    }
    for (std::size_t h = 0; h < s_hist.size(); ++h) {
      const double beta = rho_hist[h] * dot(y_hist[h], dir);
      for (std::size_t i = 0; i < dim; ++i) {
        dir[i] += (alpha[h] - beta) * s_hist[h][i];
      }
    }
    for (double& v : dir) v = -v;
    double slope = dot(grad, dir);
    if (!(slope < 0)) {
      for (std::size_t i = 0; i < dim; ++i) dir[i] = -grad[i];
      slope = dot(grad, dir);
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
    }
    double step = 1.0;
    double trial_loss = 0;
    while (true) {
      for (std::size_t i = 0; i < dim; ++i) trial[i] = w[i] + step * dir[i];
      trial_loss = SoftmaxLoss(x, p, data.y, k, trial, lp.l2, nullptr);
      if (trial_loss <= loss + 1e-4 * step * slope || step < 1e-12) break;
      step *= 0.5;
    }
    if (step < 1e-12) break;
    SoftmaxLoss(x, p, data.y, k, trial, lp.l2, &trial_grad);
    std::vector<double> s(dim), y(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      s[i] = trial[i] - w[i];
      y[i] = trial_grad[i] - grad[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      if (s_hist.size() == kMemory) {
        s_hist.erase(s_hist.begin());
        y_hist.erase(y_hist.begin());
        rho_hist.erase(rho_hist.begin());
      }
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
    }
    w.swap(trial);
    grad.swap(trial_grad);
    loss = trial_loss;
  }
  model.weights = std::move(w);
}

// One-vs-rest Pegasos. The bias is an extra constant input; weights are
// averaged over the second half of the updates.
void TrainLinSvm(const Dataset& data, TrainedModel& model) {
  model.standardizer = Standardizer::Fit(data.x);
  const std::vector<double> x = model.standardizer.Apply(data.x);
  const std::size_t n = data.rows(), p = data.cols(), k = data.classes.size();
  const SvmParams& sp = model.params.svm;
  if (!(sp.lambda > 0) || sp.epochs < 1) {
    throw InputError("linsvm needs lambda > 0 and epochs >= 1");
  }
  model.weights.assign(k * (p + 1), 0.0);
  const std::uint64_t total = static_cast<std::uint64_t>(sp.epochs) * n;
  for (std::size_t c = 0; c < k; ++c) {
    Rng rng(DeriveSeed(model.seed, c));
    std::vector<double> w(p + 1, 0.0), avg(p + 1, 0.0);
    std::uint64_t averaged = 0;
    for (std::uint64_t t = 1; t <= total; ++t) {
      const std::size_t i = rng.UniformIndex(n);
      const double label = data.y[i] == static_cast<int>(c) ? 1.0 : -1.0;
      const double* xi = x.data() + i * p;
      double margin = w[p];
      for (std::size_t j = 0; j < p; ++j) margin += w[j] * xi[j];
      margin *= label;
      const double eta = 1.0 / (sp.lambda * static_cast<double>(t));
      const double shrink = 1.0 - eta * sp.lambda;
      for (double& v : w) v *= shrink;
      if (margin < 1) {
        for (std::size_t j = 0; j < p; ++j) w[j] += eta * label * xi[j];
        w[p] += eta * label;
      }
      if (2 * t > total) {
        ++averaged;
        for (std::size_t j = 0; j <= p; ++j) avg[j] += w[j];
      }
    }
    for (std::size_t j = 0; j <= p; ++j) {
      model.weights[c * (p + 1) + j] = avg[j] / static_cast<double>(averaged);
    }
  }
}

double Gini(std::span<const std::size_t> counts, std::size_t n) {
  if (n == 0) return 0;
  double s = 0;
  for (std::size_t c : counts) {
    const double f = static_cast<double>(c) / static_cast<double>(n);
    s += f * f;
  }
  return 1 - s;
}

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const ForestParams& fp, std::size_t mtry,
              Rng& rng, Tree& tree, std::vector<double>& importance)
      : data_(data), fp_(fp), mtry_(mtry), rng_(rng), tree_(tree),
        importance_(importance), k_(data.classes.size()) {}

  void Build(std::vector<std::size_t> rows) {
    root_size_ = static_cast<double>(rows.size());
    Grow(rows, 0);
  }

 private:
  // Appends the subtree in pre-order and returns its root index.
  int Grow(std::vector<std::size_t>& rows, int depth) {
    const int self = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    std::vector<std::size_t> counts(k_, 0);
    for (std::size_t r : rows) ++counts[static_cast<std::size_t>(data_.y[r])];
    const std::size_t n = rows.size();
    const double gini = Gini(counts, n);

    bool split = gini > 0 && n >= fp_.min_samples_split &&
                 (fp_.max_depth <= 0 || depth < fp_.max_depth);
    int best_feature = -1;
    double best_threshold = 0, best_score = 0;
    if (split) {
      const std::size_t p = data_.cols();
      std::vector<std::size_t> order(p);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::vector<std::pair<double, int>> col(n);
      std::vector<std::size_t> left(k_);
      // Keep drawing features past mtry until some split is valid.
      for (std::size_t j = 0; j < p && (j < mtry_ || best_feature < 0); ++j) {
        std::swap(order[j], order[j + rng_.UniformIndex(p - j)]);
        const std::size_t f = order[j];
        for (std::size_t i = 0; i < n; ++i) {
          col[i] = {data_.x.at(rows[i], f), data_.y[rows[i]]};
        }
        std::sort(col.begin(), col.end());
        std::fill(left.begin(), left.end(), 0);
        for (std::size_t i = 1; i < n; ++i) {
          ++left[static_cast<std::size_t>(col[i - 1].second)];
          if (!(col[i - 1].first < col[i].first)) continue;
          std::vector<std::size_t> right(k_);
          for (std::size_t c = 0; c < k_; ++c) right[c] = counts[c] - left[c];
          const double score =
              static_cast<double>(i) * Gini(left, i) +
              static_cast<double>(n - i) * Gini(right, n - i);
          if (best_feature < 0 || score < best_score) {
            best_feature = static_cast<int>(f);
            best_score = score;
            double mid = col[i - 1].first + (col[i].first - col[i - 1].first) / 2;
            best_threshold = mid < col[i].first ? mid : col[i - 1].first;
          }
        }
      }
      split = best_feature >= 0;
    }

    if (!split) {
      auto& dist = tree_.nodes[static_cast<std::size_t>(self)].distribution;
      dist.resize(k_);
      for (std::size_t c = 0; c < k_; ++c) {
        dist[c] = static_cast<double>(counts[c]) / static_cast<double>(n);
      }
      return self;
    }

    importance_[static_cast<std::size_t>(best_feature)] +=
        (static_cast<double>(n) * gini - best_score) / root_size_;
    std::vector<std::size_t> lo, hi;
    for (std::size_t r : rows) {
      (data_.x.at(r, static_cast<std::size_t>(best_feature)) <= best_threshold
           ? lo
           : hi)
          .push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();
    const int l = Grow(lo, depth + 1);
    const int r = Grow(hi, depth + 1);
    TreeNode& node = tree_.nodes[static_cast<std::size_t>(self)];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = l;
    node.right = r;
    return self;
  }

  const Dataset& data_;
  const ForestParams& fp_;
  std::size_t mtry_;
  Rng& rng_;
  Tree& tree_;
  std::vector<double>& importance_;
  std::size_t k_;
  double root_size_ = 1;
};

void NormalizeToOne(std::vector<double>& v) {
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  if (s > 0) {
    for (double& x : v) x /= s;
  }
}

void TrainForest(const Dataset& data, TrainedModel& model, int workers) {
  const ForestParams& fp = model.params.forest;
  if (fp.trees < 1) throw InputError("a forest needs at least one tree");
  const std::size_t p = data.cols(), n = data.rows();
  std::size_t mtry = fp.max_features;
  if (mtry == 0) {
    mtry = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(p)))));
  }
  mtry = std::min(mtry, p);
  const auto trees = static_cast<std::size_t>(fp.trees);
  model.trees.assign(trees, {});
  std::vector<std::vector<double>> imp(trees, std::vector<double>(p, 0.0));
  ParallelFor(trees, workers, [&](std::size_t t) {
    Rng rng(DeriveSeed(model.seed, t));
    std::vector<std::size_t> rows(n);
    if (fp.bootstrap) {
      for (std::size_t& r : rows) r = rng.UniformIndex(n);
      std::sort(rows.begin(), rows.end());
    } else {
      std::iota(rows.begin(), rows.end(), std::size_t{0});
    }
    TreeBuilder(data, fp, mtry, rng, model.trees[t], imp[t]).Build(rows);
    NormalizeToOne(imp[t]);
  });
  model.importance.assign(p, 0.0);
  for (const auto& v : imp) {
    for (std::size_t j = 0; j < p; ++j) model.importance[j] += v[j];
  }
  NormalizeToOne(model.importance);
  if (std::accumulate(model.importance.begin(), model.importance.end(), 0.0) == 0) {
    model.importance.assign(p, 1.0 / static_cast<double>(p));
  }
}

json TreeToJson(const Tree& tree, int node) {
  const TreeNode& n = tree.nodes[static_cast<std::size_t>(node)];
  if (n.feature < 0) return json{{"leaf", n.distribution}};
  return json{{"feature", n.feature},
              {"threshold", n.threshold},
              {"left", TreeToJson(tree, n.left)},
              {"right", TreeToJson(tree, n.right)}};
}

int TreeFromJson(const json& j, Tree& tree, std::size_t features,
                 std::size_t classes) {
  const int self = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  if (j.contains("leaf")) {
    auto dist = j.at("leaf").get<std::vector<double>>();
    if (dist.size() != classes) throw InputError("leaf distribution size mismatch");
    tree.nodes[static_cast<std::size_t>(self)].distribution = std::move(dist);
    return self;
  }
  const int feature = j.at("feature").get<int>();
  if (feature < 0 || static_cast<std::size_t>(feature) >= features) {
    throw InputError("split feature out of range");
  }
  const double threshold = j.at("threshold").get<double>();
  const int l = TreeFromJson(j.at("left"), tree, features, classes);
  const int r = TreeFromJson(j.at("right"), tree, features, classes);
  TreeNode& n = tree.nodes[static_cast<std::size_t>(self)];
  n.feature = feature;
  n.threshold = threshold;
  n.left = l;
  n.right = r;
  return self;
}

}  // namespace

std::string_view ToString(ModelKind k) {
  switch (k) {
    case ModelKind::kLogReg: return "logreg";
    case ModelKind::kLinSvm: return "linsvm";
    case ModelKind::kForest: return "rforest";
  }
  return "logreg";
}

std::optional<ModelKind> ParseModelKind(std::string_view s) {
  for (ModelKind k : {ModelKind::kLogReg, ModelKind::kLinSvm, ModelKind::kForest}) {
    if (s == ToString(k)) return k;
  }
  return std::nullopt;
}

ForestParams ForestParams::SmallSample() {
  ForestParams p;
  p.trees = 8;
  p.max_depth = 3;
  return p;
}

double SoftmaxLoss(std::span<const double> x, std::size_t p,
                   std::span<const int> y, std::size_t classes,
                   std::span<const double> w, double l2,
                   std::vector<double>* grad) {
  const std::size_t n = y.size();
  if (grad) grad->assign(w.size(), 0.0);
  double loss = 0;
  std::vector<double> z;
  for (std::size_t i = 0; i < n; ++i) {
    std::span<const double> row = x.subspan(i * p, p);
    LinearScores(row, classes, w, z);
    const double m = *std::max_element(z.begin(), z.end());
    double sum = 0;
    for (double v : z) sum += std::exp(v - m);
    const auto yi = static_cast<std::size_t>(y[i]);
    loss += std::log(sum) + m - z[yi];
    if (grad) {
      for (std::size_t k = 0; k < classes; ++k) {
        const double coef = std::exp(z[k] - m) / sum - (k == yi ? 1.0 : 0.0);
        double* gk = grad->data() + k * (p + 1);
        for (std::size_t j = 0; j < p; ++j) gk[j] += coef * row[j];
        gk[p] += coef;
      }
    }
  }
  const double inv_n = n ? 1.0 / static_cast<double>(n) : 0.0;
  loss *= inv_n;
  double penalty = 0;
  for (std::size_t k = 0; k < classes; ++k) {
    for (std::size_t j = 0; j < p; ++j) {
      const double wj = w[k * (p + 1) + j];
      penalty += wj * wj;
      if (grad) {
        double& g = (*grad)[k * (p + 1) + j];
        g = g * inv_n + l2 * wj;
      }
    }
    if (grad) (*grad)[k * (p + 1) + p] *= inv_n;
  }
  return loss + 0.5 * l2 * penalty;
}

TrainedModel Train(ModelKind kind, const Dataset& data,
                   const Hyperparams& params, std::uint64_t seed,
                   int workers) {
  CheckTrainable(data);
  TrainedModel model;
  model.kind = kind;
  model.features = data.x.columns();
  model.classes = data.classes;
  model.seed = seed;
  model.params = params;
  switch (kind) {
    case ModelKind::kLogReg: TrainLogReg(data, model); break;
    case ModelKind::kLinSvm: TrainLinSvm(data, model); break;
    case ModelKind::kForest: TrainForest(data, model, workers); break;
  }
  return model;
}

std::vector<std::vector<double>> TrainedModel::PredictProba(
    const FeatureTable& x) const {
  if (x.columns() != features) {
    throw InputError("feature schema does not match the model (" +
                     std::to_string(x.cols()) + " columns given, " +
                     std::to_string(features.size()) + " expected)");
  }
  const std::size_t k = classes.size(), p = features.size();
  std::vector<std::vector<double>> out(x.rows());
  if (kind == ModelKind::kForest) {
    for (std::size_t r = 0; r < x.rows(); ++r) {
      std::vector<double>& acc = out[r];
      acc.assign(k, 0.0);
      for (const Tree& t : trees) {
        std::size_t node = 0;
        while (t.nodes[node].feature >= 0) {
          const TreeNode& nd = t.nodes[node];
          node = static_cast<std::size_t>(
              x.at(r, static_cast<std::size_t>(nd.feature)) <= nd.threshold
                  ? nd.left
                  : nd.right);
        }
        for (std::size_t c = 0; c < k; ++c) acc[c] += t.nodes[node].distribution[c];
      }
      for (double& v : acc) v /= static_cast<double>(trees.size());
    }
    return out;
  }
  const std::vector<double> z = standardizer.Apply(x);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    LinearScores(std::span<const double>(z).subspan(r * p, p), k, weights, out[r]);
    if (kind == ModelKind::kLogReg) SoftmaxInPlace(out[r]);
  }
  return out;
}

std::vector<int> TrainedModel::Predict(const FeatureTable& x) const {
  std::vector<int> out;
  for (const auto& scores : PredictProba(x)) {
    out.push_back(static_cast<int>(
        std::max_element(scores.begin(), scores.end()) - scores.begin()));
  }
  return out;
}

std::string TrainedModel::ToJson() const {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = std::string(ToString(kind));
  j["features"] = features;
  j["classes"] = classes;
  j["seed"] = seed;
  j["params"] = {
      {"logreg", {{"l2", params.logreg.l2},
                  {"tolerance", params.logreg.tolerance},
                  {"max_iterations", params.logreg.max_iterations}}},
      {"linsvm", {{"lambda", params.svm.lambda}, {"epochs", params.svm.epochs}}},
      {"rforest", {{"trees", params.forest.trees},
                   {"max_depth", params.forest.max_depth},
                   {"min_samples_split", params.forest.min_samples_split},
                   {"max_features", params.forest.max_features},
                   {"bootstrap", params.forest.bootstrap}}}};
  j["standardizer"] = {{"mean", standardizer.mean},
                       {"scale", standardizer.scale}};
  j["weights"] = weights;
  json trees_json = json::array();
  for (const Tree& t : trees) trees_json.push_back(TreeToJson(t, 0));
  j["trees"] = std::move(trees_json);
  j["importance"] = importance;
  return j.dump(2) + "\n";
}

TrainedModel TrainedModel::FromJson(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw InputError("unsupported model format version " +
                       j.at("format_version").dump());
    }
    TrainedModel m;
    auto kind = ParseModelKind(j.at("kind").get<std::string>());
    if (!kind) throw InputError("unknown model kind " + j.at("kind").dump());
    m.kind = *kind;
    m.features = j.at("features").get<std::vector<std::string>>();
    m.classes = j.at("classes").get<std::vector<std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    const json& p = j.at("params");
    m.params.logreg.l2 = p.at("logreg").at("l2").get<double>();
    m.params.logreg.tolerance = p.at("logreg").at("tolerance").get<double>();
    m.params.logreg.max_iterations = p.at("logreg").at("max_iterations").get<int>();
    m.params.svm.lambda = p.at("linsvm").at("lambda").get<double>();
    m.params.svm.epochs = p.at("linsvm").at("epochs").get<int>();
    const json& f = p.at("rforest");
    m.params.forest.trees = f.at("trees").get<int>();
    m.params.forest.max_depth = f.at("max_depth").get<int>();
    m.params.forest.min_samples_split = f.at("min_samples_split").get<std::size_t>();
    m.params.forest.max_features = f.at("max_features").get<std::size_t>();
    m.params.forest.bootstrap = f.at("bootstrap").get<bool>();
    m.standardizer.mean = j.at("standardizer").at("mean").get<std::vector<double>>();
    m.standardizer.scale = j.at("standardizer").at("scale").get<std::vector<double>>();
    m.weights = j.at("weights").get<std::vector<double>>();
    for (const json& t : j.at("trees")) {
      Tree tree;
      TreeFromJson(t, tree, m.features.size(), m.classes.size());
      m.trees.push_back(std::move(tree));
    }
    m.importance = j.at("importance").get<std::vector<double>>();
    const std::size_t linear = m.classes.size() * (m.features.size() + 1);
    if (m.kind != ModelKind::kForest &&
        (m.weights.size() != linear ||
         m.standardizer.mean.size() != m.features.size() ||
         m.standardizer.scale.size() != m.features.size())) {
      throw InputError("linear model weights do not match its schema");
    }
    if (m.kind == ModelKind::kForest && m.trees.empty()) {
      throw InputError("forest model has no trees");
    }
    return m;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model JSON: ") + e.what());
  }
}

std::vector<std::pair<std::string, double>> FeatureImportance(
    const TrainedModel& model) {
  if (model.kind != ModelKind::kForest) {
    throw InputError("feature importance is only defined for forests");
  }
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t j = 0; j < model.features.size(); ++j) {
    out.emplace_back(model.features[j], model.importance[j]);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  return out;
}

}  // namespace stylolab::learn
