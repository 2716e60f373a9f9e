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

#ifndef JOBSTD_GBDT_H_
#define JOBSTD_GBDT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "jobstd/feature_vector.h"

namespace jobstd {

// Node of a binary regression tree. Internal nodes route an example left
// iff x[feature] < threshold; leaves (feature < 0) hold a value.
struct TreeNode {
  int32_t feature = -1;
  double threshold = 0.0;
  int32_t left = -1;
  int32_t right = -1;
  double value = 0.0;

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode &) const = default;
};

// Nodes are stored root first.
struct RegressionTree {
  std::vector<TreeNode> nodes;

  double Predict(const FeatureVector &x) const;
  // Number of edges on the longest root-to-leaf path.
  int Depth() const;

  bool operator==(const RegressionTree &) const = default;
};

// Additive ensemble: margin = base_score + learning_rate * sum of trees.
struct GbdtModel {
  std::vector<RegressionTree> trees;
  double learning_rate = 0.1;
  double base_score = 0.0;  // prior log-odds
  int max_depth = 3;
  int schema_version = kFeatureSchemaVersion;

  double Margin(const FeatureVector &x) const;

  bool operator==(const GbdtModel &) const = default;
};

// Throws Error(kSchemaMismatch) when schema versions differ.
double ScoreGbdt(const GbdtModel &model, const FeatureVector &x);

struct GbdtTrainOptions {
  int num_trees = 100;
  int max_depth = 3;
  double learning_rate = 0.1;
  int min_leaf = 5;
};

struct GbdtTrainResult {
  GbdtModel model;
  // Weighted mean training log-loss of the prior, then after every tree.
  std::vector<double> loss_history;
};

// Gradient boosting with logistic loss.
//
// With margin m and p = sigmoid(m), each example contributes gradient
// g = w (p - y) and hessian h = w p (1 - p). Trees are grown greedily by the
// second-order gain G_L^2/H_L + G_R^2/H_R - G^2/H over midpoints between
// sorted distinct feature values; ties keep the lowest feature index, then
// the lowest threshold. A leaf holds the Newton step -G/H; if adding
// learning_rate times that value would raise the leaf's loss, the value is
// halved until it does not, which keeps the training loss non-increasing.
//
// Throws Error(kDegenerateData) unless both labels are present.
GbdtTrainResult TrainGbdt(std::span<const TrainingExample> data,
                          const GbdtTrainOptions &options = {});

}  // namespace jobstd

#endif  // JOBSTD_GBDT_H_
