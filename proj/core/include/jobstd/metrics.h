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

#ifndef JOBSTD_METRICS_H_
#define JOBSTD_METRICS_H_

#include <span>
#include <string>
#include <vector>

#include "jobstd/feature_vector.h"
#include "jobstd/ranker.h"

namespace jobstd {

// Weighted mean logistic loss of probabilities against the labels.
double LogLoss(std::span<const double> probabilities,
               std::span<const TrainingExample> data);

// Fraction (weighted) of examples on the correct side of 0.5.
double Accuracy(std::span<const double> probabilities,
                std::span<const TrainingExample> data);

// Area under the ROC curve with tied scores counted as one half. Returns
// 0.5 when either class is absent.
double Auc(std::span<const double> scores, std::span<const int> labels);

// Mean over groups (TrainingExample::group) of the fraction of positives
// among the k highest-scored examples of the group (score descending, then
// entity id, then input order).
double PrecisionAtK(std::span<const double> scores,
                    std::span<const TrainingExample> data, size_t k);

// 1 / (1-based position of the first relevant item), or 0 when none is.
double ReciprocalRank(const std::vector<bool> &relevant_in_rank_order);

struct EvaluationReport {
  double log_loss = 0.0;
  double accuracy = 0.0;
  double auc = 0.5;
  double precision_at_k = 0.0;
  size_t k = 5;
  size_t examples = 0;
};

EvaluationReport Evaluate(const RankModel &model,
                          std::span<const TrainingExample> data, size_t k = 5);

}  // namespace jobstd

#endif  // JOBSTD_METRICS_H_
