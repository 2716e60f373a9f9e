// Copyright 2026 The jobstd Authors.
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

#include "jobstd/gbdt.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jobstd/error.h"
#include "jobstd/logistic.h"

namespace jobstd {

double RegressionTree::Predict(const FeatureVector &x) const {
  if (nodes.empty()) return 0.0;
  int32_t i = 0;
  while (!nodes[i].is_leaf()) {
    const TreeNode &n = nodes[i];
    i = x[static_cast<size_t>(n.feature)] < n.threshold ? n.left : n.right;
  }
  return nodes[i].value;
}

int RegressionTree::Depth() const {
  if (nodes.empty()) return 0;
  int deepest = 0;
  std::vector<std::pair<int32_t, int>> stack = {{0, 0}};
  while (!stack.empty()) {
    auto [i, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    if (!nodes[i].is_leaf()) {
      stack.push_back({nodes[i].left, d + 1});
      stack.push_back({nodes[i].right, d + 1});
    }
  }
  return deepest;
}

double GbdtModel::Margin(const FeatureVector &x) const {
  double sum = 0.0;
  for (const RegressionTree &tree : trees) sum += tree.Predict(x);
  return base_score + learning_rate * sum;
}

double ScoreGbdt(const GbdtModel &model, const FeatureVector &x) {
  if (model.schema_version != x.schema_version) {
    throw Error(ErrorCode::kSchemaMismatch,
                "gbdt model schema " + std::to_string(model.schema_version) +
                    " vs features " + std::to_string(x.schema_version));
  }
  return Sigmoid(model.Margin(x));
}

namespace {

constexpr double kMinGain = 1e-12;
constexpr int kMaxHalvings = 60;

class TreeBuilder {
 public:
  TreeBuilder(std::span<const TrainingExample> data,
              const std::vector<std::vector<uint32_t>> &sorted,
              const std::vector<double> &margins, const GbdtTrainOptions &options)
      : data_(data),
        sorted_(sorted),
        margins_(margins),
        options_(options),
        grad_(data.size()),
        hess_(data.size()),
        member_(data.size(), 0) {
    for (size_t i = 0; i < data.size(); ++i) {
      double p = Sigmoid(margins[i]);
      grad_[i] = data[i].weight * (p - data[i].label);
      hess_[i] = data[i].weight * p * (1.0 - p);
    }
  }

  RegressionTree Build() {
    std::vector<uint32_t> rows(data_.size());
    std::iota(rows.begin(), rows.end(), 0);
    Grow(rows, 0);
    return std::move(tree_);
  }

 private:
  struct Split {
    int32_t feature = -1;
    double threshold = 0.0;
    double gain = kMinGain;
  };

  int32_t Grow(const std::vector<uint32_t> &rows, int depth) {
    auto index = static_cast<int32_t>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    Split split;
    if (depth < options_.max_depth &&
        rows.size() >= 2 * static_cast<size_t>(std::max(options_.min_leaf, 1))) {
      split = FindSplit(rows);
    }
    if (split.feature < 0) {
      tree_.nodes[index].value = LeafValue(rows);
      return index;
    }
    std::vector<uint32_t> left;
    std::vector<uint32_t> right;
    for (uint32_t r : rows) {
      (data_[r].features[split.feature] < split.threshold ? left : right)
          .push_back(r);
    }
    int32_t l = Grow(left, depth + 1);
    int32_t r = Grow(right, depth + 1);
    TreeNode &node = tree_.nodes[index];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return index;
  }

  Split FindSplit(const std::vector<uint32_t> &rows) {
    double g_total = 0.0;
    double h_total = 0.0;
    for (uint32_t r : rows) {
      g_total += grad_[r];
      h_total += hess_[r];
      member_[r] = 1;
    }
    Split best;
    if (h_total <= 0.0) {
      for (uint32_t r : rows) member_[r] = 0;
      return best;
    }
    const double parent = g_total * g_total / h_total;
    const size_t min_leaf = static_cast<size_t>(std::max(options_.min_leaf, 1));
    std::vector<uint32_t> ordered;
    ordered.reserve(rows.size());
    for (size_t f = 0; f < kFeatureCount; ++f) {
      ordered.clear();
      for (uint32_t r : sorted_[f]) {
        if (member_[r]) ordered.push_back(r);
      }
      double g_left = 0.0;
      double h_left = 0.0;
      for (size_t k = 0; k + 1 < ordered.size(); ++k) {
        g_left += grad_[ordered[k]];
        h_left += hess_[ordered[k]];
        double a = data_[ordered[k]].features[f];
        double b = data_[ordered[k + 1]].features[f];
        if (!(a < b)) continue;
        size_t n_left = k + 1;
        size_t n_right = ordered.size() - n_left;
        if (n_left < min_leaf || n_right < min_leaf) continue;
        double h_right = h_total - h_left;
        if (h_left <= 0.0 || h_right <= 0.0) continue;
        double g_right = g_total - g_left;
        double gain = g_left * g_left / h_left + g_right * g_right / h_right -
                      parent;
        if (gain > best.gain) {
          double threshold = a + (b - a) / 2.0;
          if (!(threshold > a)) threshold = b;
          best = {static_cast<int32_t>(f), threshold, gain};
        }
      }
    }
    for (uint32_t r : rows) member_[r] = 0;
    return best;
  }

  double RowsLoss(const std::vector<uint32_t> &rows, double delta) const {
    double loss = 0.0;
    for (uint32_t r : rows) {
      loss += data_[r].weight * LogisticLoss(margins_[r] + delta, data_[r].label);
    }
    return loss;
  }

  double LeafValue(const std::vector<uint32_t> &rows) const {
    double g = 0.0;
    double h = 0.0;
    for (uint32_t r : rows) {
      g += grad_[r];
      h += hess_[r];
    }
    if (h <= 0.0 || rows.empty()) return 0.0;
    double value = -g / h;
    if (!std::isfinite(value)) return 0.0;
    const double before = RowsLoss(rows, 0.0);
    for (int i = 0; i < kMaxHalvings; ++i) {
      if (RowsLoss(rows, options_.learning_rate * value) <= before) {
        return value;
      }
      value /= 2.0;
    }
    return 0.0;
  }

  std::span<const TrainingExample> data_;
  const std::vector<std::vector<uint32_t>> &sorted_;
  const std::vector<double> &margins_;
  const GbdtTrainOptions &options_;
  std::vector<double> grad_;
  std::vector<double> hess_;
  std::vector<char> member_;
  RegressionTree tree_;
};

double MeanLoss(std::span<const TrainingExample> data,
                const std::vector<double> &margins) {
  double loss = 0.0;
  double weight = 0.0;
  for (size_t i = 0; i < data.size(); ++i) {
    loss += data[i].weight * LogisticLoss(margins[i], data[i].label);
    weight += data[i].weight;
  }
  return loss / weight;
}

}  // namespace

GbdtTrainResult TrainGbdt(std::span<const TrainingExample> data,
                          const GbdtTrainOptions &options) {
  RequireBothLabels(data);
  if (options.max_depth < 0 || options.num_trees < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative tree count or depth");
  }
  GbdtTrainResult result;
  GbdtModel &model = result.model;
  model.learning_rate = options.learning_rate;
  model.max_depth = options.max_depth;

  double positive = 0.0;
  double total = 0.0;
  for (const TrainingExample &ex : data) {
    positive += ex.weight * ex.label;
    total += ex.weight;
  }
  double prior = positive / total;
  model.base_score = std::log(prior / (1.0 - prior));

  // Row order per feature, ties broken by row index for determinism.
  std::vector<std::vector<uint32_t>> sorted(kFeatureCount);
  for (size_t f = 0; f < kFeatureCount; ++f) {
    sorted[f].resize(data.size());
    std::iota(sorted[f].begin(), sorted[f].end(), 0);
    std::stable_sort(sorted[f].begin(), sorted[f].end(),
                     [&](uint32_t a, uint32_t b) {
                       return data[a].features[f] < data[b].features[f];
                     });
  }

  std::vector<double> margins(data.size(), model.base_score);
  result.loss_history.push_back(MeanLoss(data, margins));
  for (int t = 0; t < options.num_trees; ++t) {
    TreeBuilder builder(data, sorted, margins, options);
    RegressionTree tree = builder.Build();
    for (size_t i = 0; i < data.size(); ++i) {
      margins[i] += model.learning_rate * tree.Predict(data[i].features);
    }
    model.trees.push_back(std::move(tree));
    result.loss_history.push_back(MeanLoss(data, margins));
  }
  return result;
}

}  // namespace jobstd
