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

#include "jobstd/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "jobstd/error.h"

namespace jobstd {

namespace {

void RequireSameSize(size_t a, size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kInvalidArgument, "score and example counts differ");
  }
}

}  // namespace

double LogLoss(std::span<const double> probabilities,
               std::span<const TrainingExample> data) {
  RequireSameSize(probabilities.size(), data.size());
  double loss = 0.0;
  double weight = 0.0;
  for (size_t i = 0; i < data.size(); ++i) {
    double p = probabilities[i];
    loss -= data[i].weight * (data[i].label == 1 ? std::log(p) : std::log1p(-p));
    weight += data[i].weight;
  }
  return weight > 0.0 ? loss / weight : 0.0;
}

double Accuracy(std::span<const double> probabilities,
                std::span<const TrainingExample> data) {
  RequireSameSize(probabilities.size(), data.size());
  double correct = 0.0;
  double weight = 0.0;
  for (size_t i = 0; i < data.size(); ++i) {
    int predicted = probabilities[i] >= 0.5 ? 1 : 0;
    if (predicted == data[i].label) correct += data[i].weight;
    weight += data[i].weight;
  }
  return weight > 0.0 ? correct / weight : 0.0;
}

double Auc(std::span<const double> scores, std::span<const int> labels) {
  RequireSameSize(scores.size(), labels.size());
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return scores[a] < scores[b]; });
  // Mann-Whitney U with average ranks over ties.
  double positives = 0.0;
  double rank_sum = 0.0;
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    double average_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (size_t t = i; t < j; ++t) {
      if (labels[order[t]] == 1) {
        positives += 1.0;
        rank_sum += average_rank;
      }
    }
    i = j;
  }
  double negatives = static_cast<double>(scores.size()) - positives;
  if (positives == 0.0 || negatives == 0.0) return 0.5;
  return (rank_sum - positives * (positives + 1.0) / 2.0) /
         (positives * negatives);
}

double PrecisionAtK(std::span<const double> scores,
                    std::span<const TrainingExample> data, size_t k) {
  RequireSameSize(scores.size(), data.size());
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  std::map<std::string, std::vector<size_t>> groups;
  for (size_t i = 0; i < data.size(); ++i) groups[data[i].group].push_back(i);
  if (groups.empty()) return 0.0;
  double total = 0.0;
  for (auto &[group, members] : groups) {
    std::stable_sort(members.begin(), members.end(), [&](size_t a, size_t b) {
      if (scores[a] != scores[b]) return scores[a] > scores[b];
      return data[a].entity_id < data[b].entity_id;
    });
    size_t n = std::min(k, members.size());
    size_t hits = 0;
    for (size_t i = 0; i < n; ++i) hits += data[members[i]].label == 1;
    total += static_cast<double>(hits) / static_cast<double>(n);
  }
  return total / static_cast<double>(groups.size());
}

double ReciprocalRank(const std::vector<bool> &relevant_in_rank_order) {
  for (size_t i = 0; i < relevant_in_rank_order.size(); ++i) {
    if (relevant_in_rank_order[i]) return 1.0 / static_cast<double>(i + 1);
  }
  return 0.0;
}

EvaluationReport Evaluate(const RankModel &model,
                          std::span<const TrainingExample> data, size_t k) {
  EvaluationReport report;
  report.k = k;
  report.examples = data.size();
  std::vector<double> scores;
  std::vector<int> labels;
  scores.reserve(data.size());
  labels.reserve(data.size());
  for (const TrainingExample &ex : data) {
    scores.push_back(Score(model, ex.features));
    labels.push_back(ex.label);
  }
  report.log_loss = LogLoss(scores, data);
  report.accuracy = Accuracy(scores, data);
  report.auc = Auc(scores, labels);
  if (!data.empty()) report.precision_at_k = PrecisionAtK(scores, data, k);
  return report;
}

}  // namespace jobstd
