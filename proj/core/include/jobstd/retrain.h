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

#ifndef JOBSTD_RETRAIN_H_
#define JOBSTD_RETRAIN_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "jobstd/entity_type.h"
#include "jobstd/feedback.h"
#include "jobstd/gbdt.h"
#include "jobstd/linear_model.h"
#include "jobstd/market_stats.h"
#include "jobstd/wire.h"

namespace jobstd {

enum class ModelKindOption { kLinear, kGbdt };

struct RetrainConfig {
  EntityType entity_type = EntityType::kSkill;
  ModelKindOption kind = ModelKindOption::kGbdt;
  LinearTrainOptions linear;
  GbdtTrainOptions gbdt;
  // Weight of feedback examples relative to seed examples (weight 1).
  double feedback_weight = 2.0;
};

// Reads {"entity_type", "kind", "feedback_weight", "linear": {...},
// "gbdt": {...}}; absent keys keep their defaults.
RetrainConfig RetrainConfigFromJson(const Json &json);

// Trains one ranker of the configured kind.
RankModel TrainRanker(std::span<const TrainingExample> data,
                      const RetrainConfig &config);

struct RetrainResult {
  ModelArtifact artifact;
  std::filesystem::path model_path;
  std::filesystem::path stats_path;
  MarketStats stats;
  size_t seed_examples = 0;
  size_t feedback_examples = 0;
};

// Trains on the seed examples plus the examples implied by the log (both
// restricted to the configured entity type; seed examples without a type
// are kept), writes the model as the next version under `models_dir` and
// the aggregated statistics as the next stats snapshot. Existing files are
// never modified.
RetrainResult Retrain(std::span<const FeedbackEvent> log,
                      std::span<const TrainingExample> seed,
                      const RetrainConfig &config,
                      const std::filesystem::path &models_dir);

// Writes `stats` as the next snapshot under `models_dir` and returns its
// path.
std::filesystem::path PublishStats(const MarketStats &stats,
                                   const std::filesystem::path &models_dir);

}  // namespace jobstd

#endif  // JOBSTD_RETRAIN_H_
