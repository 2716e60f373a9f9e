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

#include "jobstd/service/registry.h"

#include <spdlog/spdlog.h>

#include "jobstd/error.h"
#include "jobstd/model_store.h"
#include "jobstd/wire.h"

namespace jobstd {

const ActiveRanker *ServingState::ranker(EntityType type) const {
  auto it = rankers.find(type);
  return it == rankers.end() ? nullptr : &it->second;
}

namespace {

std::filesystem::path RequireVersion(const std::filesystem::path &dir,
                                     int64_t version) {
  std::filesystem::path path = VersionPath(dir, version);
  if (version <= 0 || !std::filesystem::is_regular_file(path)) {
    throw Error(ErrorCode::kNotFound,
                "no version " + std::to_string(version) + " in " + dir.string());
  }
  return path;
}

ActiveRanker LoadRanker(const std::filesystem::path &models_dir,
                        EntityType type, int64_t version) {
  ModelArtifact artifact =
      LoadModel(RequireVersion(RankerDir(models_dir, type), version));
  if (artifact.entity_type && *artifact.entity_type != type) {
    throw Error(ErrorCode::kInvalidArgument,
                "model for " + std::string(EntityTypeName(*artifact.entity_type)) +
                    " found in the " + std::string(EntityTypeName(type)) +
                    " directory");
  }
  return {version, std::make_shared<const RankModel>(ToRankModel(artifact))};
}

std::shared_ptr<const QuestionClassifier> LoadClassifier(
    const std::filesystem::path &models_dir, int64_t version,
    std::shared_ptr<const EmbeddingTable> embeddings) {
  ModelArtifact artifact =
      LoadModel(RequireVersion(ClassifierDir(models_dir), version));
  auto *model = std::get_if<QuestionModel>(&artifact.model);
  if (model == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "classifier file is not a question model");
  }
  return std::make_shared<const QuestionClassifier>(*model, std::move(embeddings));
}

std::shared_ptr<const MarketStats> LoadStats(
    const std::filesystem::path &models_dir, int64_t version) {
  return std::make_shared<const MarketStats>(
      StatsFromJson(ReadJsonFile(RequireVersion(StatsDir(models_dir), version))));
}

}  // namespace

std::shared_ptr<const ServingState> LoadServingState(const ServiceConfig &config) {
  auto state = std::make_shared<ServingState>();
  state->taxonomy = std::make_shared<const Taxonomy>(
      LoadTaxonomy(config.taxonomy, config.taxonomy_version));
  state->embeddings =
      std::make_shared<const EmbeddingTable>(LoadEmbeddings(config.embeddings));
  state->generator = std::make_shared<const CandidateGenerator>(state->taxonomy);
  state->typeahead = std::make_shared<const TitleTypeahead>(*state->taxonomy);
  state->encoder = std::make_shared<const SentenceEncoder>(state->embeddings);
  state->stats = std::make_shared<const MarketStats>();
  const std::filesystem::path &dir = config.models_dir;
  for (EntityType type : kAllEntityTypes) {
    if (int64_t v = LatestVersion(RankerDir(dir, type)); v > 0) {
      state->rankers[type] = LoadRanker(dir, type, v);
    } else {
      spdlog::warn("no {} ranker under {}", EntityTypeName(type), dir.string());
    }
  }
  if (int64_t v = LatestVersion(ClassifierDir(dir)); v > 0) {
    state->classifier = LoadClassifier(dir, v, state->embeddings);
    state->classifier_version = v;
  }
  if (int64_t v = LatestVersion(StatsDir(dir)); v > 0) {
    state->stats = LoadStats(dir, v);
    state->stats_version = v;
  }
  return state;
}

ModelRegistry::ModelRegistry(std::shared_ptr<const ServingState> initial,
                             std::filesystem::path models_dir)
    : state_(std::move(initial)), models_dir_(std::move(models_dir)) {}

std::shared_ptr<const ServingState> ModelRegistry::Snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return state_;
}

void ModelRegistry::Publish(std::shared_ptr<const ServingState> state) {
  std::lock_guard<std::mutex> lock(mu_);
  state_ = std::move(state);
}

void ModelRegistry::Activate(EntityType type, int64_t version) {
  std::lock_guard<std::mutex> activate(activate_mu_);
  ActiveRanker ranker = LoadRanker(models_dir_, type, version);
  auto next = std::make_shared<ServingState>(*Snapshot());
  next->rankers[type] = std::move(ranker);
  Publish(std::move(next));
}

void ModelRegistry::ActivateClassifier(int64_t version) {
  std::lock_guard<std::mutex> activate(activate_mu_);
  auto next = std::make_shared<ServingState>(*Snapshot());
  next->classifier = LoadClassifier(models_dir_, version, next->embeddings);
  next->classifier_version = version;
  Publish(std::move(next));
}

void ModelRegistry::ActivateStats(int64_t version) {
  std::lock_guard<std::mutex> activate(activate_mu_);
  auto next = std::make_shared<ServingState>(*Snapshot());
  next->stats = LoadStats(models_dir_, version);
  next->stats_version = version;
  Publish(std::move(next));
}

std::vector<int64_t> ModelRegistry::Versions(EntityType type) const {
  return ListVersions(RankerDir(models_dir_, type));
}

}  // namespace jobstd
