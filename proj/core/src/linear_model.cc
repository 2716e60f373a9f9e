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

#include "jobstd/linear_model.h"

#include <cmath>

#include "jobstd/error.h"
#include "jobstd/logistic.h"

namespace jobstd {

double LinearModel::Margin(const FeatureVector &x) const {
  double m = bias;
  for (size_t i = 0; i < kFeatureCount; ++i) m += weights[i] * x[i];
  return m;
}

double ScoreLinear(const LinearModel &model, const FeatureVector &x) {
  if (model.schema_version != x.schema_version) {
    throw Error(ErrorCode::kSchemaMismatch,
                "linear model schema " + std::to_string(model.schema_version) +
                    " vs features " + std::to_string(x.schema_version));
  }
  return Sigmoid(model.Margin(x));
}

LinearObjective EvaluateLinearObjective(std::span<const TrainingExample> data,
                                        const LinearModel &model, double l2) {
  LinearObjective out;
  double total_weight = 0.0;
  for (const TrainingExample &ex : data) total_weight += ex.weight;
  if (total_weight <= 0.0) return out;
  for (const TrainingExample &ex : data) {
    double m = model.Margin(ex.features);
    double w = ex.weight / total_weight;
    out.loss += w * LogisticLoss(m, ex.label);
    double residual = Sigmoid(m) - ex.label;  // d loss / d margin
    for (size_t i = 0; i < kFeatureCount; ++i) {
      out.gradient[i] += w * residual * ex.features[i];
    }
    out.gradient[kFeatureCount] += w * residual;
  }
  for (size_t i = 0; i < kFeatureCount; ++i) {
    out.loss += 0.5 * l2 * model.weights[i] * model.weights[i];
    out.gradient[i] += l2 * model.weights[i];
  }
  return out;
}

LinearTrainResult TrainLinear(std::span<const TrainingExample> data,
                              const LinearTrainOptions &options) {
  RequireBothLabels(data);
  LinearTrainResult result;
  LinearModel &model = result.model;
  LinearObjective objective = EvaluateLinearObjective(data, model, options.l2);
  result.loss_history.push_back(objective.loss);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    double step = options.learning_rate;
    LinearModel next;
    LinearObjective next_objective;
    // Backtracking: at most 40 halvings, after which the step is dropped.
    bool accepted = false;
    for (int attempt = 0; attempt < 40; ++attempt) {
      next = model;
      for (size_t i = 0; i < kFeatureCount; ++i) {
        next.weights[i] -= step * objective.gradient[i];
      }
      next.bias -= step * objective.gradient[kFeatureCount];
      next_objective = EvaluateLinearObjective(data, next, options.l2);
      if (next_objective.loss <= objective.loss) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (accepted) {
      model = next;
      objective = next_objective;
    }
    result.loss_history.push_back(objective.loss);
  }
  return result;
}

}  // namespace jobstd
