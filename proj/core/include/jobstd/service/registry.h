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

#ifndef JOBSTD_SERVICE_REGISTRY_H_
#define JOBSTD_SERVICE_REGISTRY_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "jobstd/candidates.h"
#include "jobstd/embedding.h"
#include "jobstd/market_stats.h"
#include "jobstd/question.h"
#include "jobstd/ranker.h"
#include "jobstd/service/config.h"
#include "jobstd/taxonomy.h"
#include "jobstd/typeahead.h"

namespace jobstd {

struct ActiveRanker {
  int64_t version = 0;
  std::shared_ptr<const RankModel> model;
};

// Everything one request reads. Immutable once published; a request holds
// one snapshot from start to finish, so it never observes a mix of model
// versions.
struct ServingState {
  std::shared_ptr<const Taxonomy> taxonomy;
  std::shared_ptr<const EmbeddingTable> embeddings;
  std::shared_ptr<const CandidateGenerator> generator;
  std::shared_ptr<const TitleTypeahead> typeahead;
  // Untrained encoder used for the semantic ranking features.
  std::shared_ptr<const SentenceEncoder> encoder;
  std::shared_ptr<const MarketStats> stats;
  int64_t stats_version = 0;  // 0: empty statistics
  std::map<EntityType, ActiveRanker> rankers;
  std::shared_ptr<const QuestionClassifier> classifier;
  int64_t classifier_version = 0;

  const ActiveRanker *ranker(EntityType type) const;
};

// Builds a state from the configured files, activating the latest version
// of every model and statistics snapshot found under models_dir.
std::shared_ptr<const ServingState> LoadServingState(const ServiceConfig &config);

// Holds the active serving state and swaps it atomically.
class ModelRegistry {
 public:
  ModelRegistry(std::shared_ptr<const ServingState> initial,
                std::filesystem::path models_dir);

  // The state to use for one request.
  std::shared_ptr<const ServingState> Snapshot() const;

  // Makes `version` of the ranker for `type` active. Throws Error(kNotFound)
  // if no such version exists under models_dir.
  void Activate(EntityType type, int64_t version);
  void ActivateClassifier(int64_t version);
  void ActivateStats(int64_t version);

  // Versions available on disk.
  std::vector<int64_t> Versions(EntityType type) const;

  void Publish(std::shared_ptr<const ServingState> state);

  const std::filesystem::path &models_dir() const { return models_dir_; }

 private:
  // Serializes activations so concurrent swaps cannot lose each other.
  std::mutex activate_mu_;
  mutable std::mutex mu_;
  std::shared_ptr<const ServingState> state_;
  std::filesystem::path models_dir_;
};

}  // namespace jobstd

#endif  // JOBSTD_SERVICE_REGISTRY_H_
