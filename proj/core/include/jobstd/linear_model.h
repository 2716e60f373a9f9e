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

#ifndef JOBSTD_LINEAR_MODEL_H_
#define JOBSTD_LINEAR_MODEL_H_

#include <array>
#include <span>
#include <vector>

#include "jobstd/feature_vector.h"

namespace jobstd {

// Bootstrap logistic ranker: sigmoid(w . x + b).
struct LinearModel {
  std::array<double, kFeatureCount> weights{};
  double bias = 0.0;
  int schema_version = kFeatureSchemaVersion;

  double Margin(const FeatureVector &x) const;

  bool operator==(const LinearModel &) const = default;
};

// Throws Error(kSchemaMismatch) when schema versions differ.
double ScoreLinear(const LinearModel &model, const FeatureVector &x);

struct LinearTrainOptions {
  int epochs = 500;
  double learning_rate = 0.5;
  double l2 = 1e-4;
};

// Weighted mean logistic loss plus (l2 / 2) |w|^2, and its gradient with
// respect to (w, b); gradient[kFeatureCount] is the bias component.
struct LinearObjective {
  double loss = 0.0;
  std::array<double, kFeatureCount + 1> gradient{};
};

LinearObjective EvaluateLinearObjective(std::span<const TrainingExample> data,
                                        const LinearModel &model, double l2);

struct LinearTrainResult {
  LinearModel model;
  // Objective before training, then after every epoch.
  std::vector<double> loss_history;
};

// Full-batch gradient descent from w = 0, b = 0. An epoch whose step would
// raise the objective halves its step size until it does not, so the loss
// history is non-increasing. Throws Error(kDegenerateData) unless both
// labels are present.
LinearTrainResult TrainLinear(std::span<const TrainingExample> data,
                              const LinearTrainOptions &options = {});

}  // namespace jobstd

#endif  // JOBSTD_LINEAR_MODEL_H_
