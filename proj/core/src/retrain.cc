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

#include "jobstd/retrain.h"

#include "jobstd/error.h"
#include "jobstd/model_store.h"

namespace jobstd {

namespace {

template <typename T>
void ReadOption(const Json &json, const char *name, T &out) {
  if (!json.contains(name)) return;
  const Json &v = json[name];
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("'") + name + "' must be an integer");
    }
  } else {
    if (!v.is_number()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("'") + name + "' must be a number");
    }
  }
  out = v.get<T>();
}

// Refuses to replace an existing artifact.
void WriteNew(const std::filesystem::path &path, const Json &json) {
  std::filesystem::create_directories(path.parent_path());
  if (std::filesystem::exists(path)) {
    throw Error(ErrorCode::kIo, path.string() + " already exists");
  }
  WriteJsonFile(path, json);
}

}  // namespace

RetrainConfig RetrainConfigFromJson(const Json &json) {
  if (!json.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "retrain config must be an object");
  }
  RetrainConfig config;
  if (json.contains("entity_type")) {
    config.entity_type = EntityTypeFromName(json["entity_type"].get<std::string>());
  }
  if (json.contains("kind")) {
    std::string kind = json["kind"].get<std::string>();
    if (kind == "linear") {
      config.kind = ModelKindOption::kLinear;
    } else if (kind == "gbdt") {
      config.kind = ModelKindOption::kGbdt;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown model kind '" + kind + "'");
    }
  }
  ReadOption(json, "feedback_weight", config.feedback_weight);
  if (!(config.feedback_weight > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "feedback_weight must be positive");
  }
  if (json.contains("linear")) {
    const Json &l = json["linear"];
    ReadOption(l, "epochs", config.linear.epochs);
    ReadOption(l, "learning_rate", config.linear.learning_rate);
    ReadOption(l, "l2", config.linear.l2);
  }
  if (json.contains("gbdt")) {
    const Json &g = json["gbdt"];
    ReadOption(g, "num_trees", config.gbdt.num_trees);
    ReadOption(g, "max_depth", config.gbdt.max_depth);
    ReadOption(g, "learning_rate", config.gbdt.learning_rate);
    ReadOption(g, "min_leaf", config.gbdt.min_leaf);
  }
  return config;
}

RankModel TrainRanker(std::span<const TrainingExample> data,
                      const RetrainConfig &config) {
  if (config.kind == ModelKindOption::kLinear) {
    return TrainLinear(data, config.linear).model;
  }
  return TrainGbdt(data, config.gbdt).model;
}

std::filesystem::path PublishStats(const MarketStats &stats,
                                   const std::filesystem::path &models_dir) {
  std::filesystem::path dir = StatsDir(models_dir);
  std::filesystem::path path = VersionPath(dir, LatestVersion(dir) + 1);
  WriteNew(path, ToJson(stats));
  return path;
}

RetrainResult Retrain(std::span<const FeedbackEvent> log,
                      std::span<const TrainingExample> seed,
                      const RetrainConfig &config,
                      const std::filesystem::path &models_dir) {
  RetrainResult result;
  std::vector<TrainingExample> data;
  for (const TrainingExample &ex : seed) {
    if (ex.entity_type && *ex.entity_type != config.entity_type) continue;
    data.push_back(ex);
  }
  result.seed_examples = data.size();
  for (TrainingExample &ex : ToTrainingExamples(log, config.feedback_weight)) {
    if (ex.entity_type != config.entity_type) continue;
    data.push_back(std::move(ex));
  }
  result.feedback_examples = data.size() - result.seed_examples;

  RankModel model = TrainRanker(data, config);
  std::filesystem::path dir = RankerDir(models_dir, config.entity_type);
  result.artifact.version = LatestVersion(dir) + 1;
  result.artifact.entity_type = config.entity_type;
  std::visit([&](auto &&m) { result.artifact.model = std::move(m); }, model);
  result.model_path = VersionPath(dir, result.artifact.version);
  WriteNew(result.model_path, ToJson(result.artifact));

  result.stats = Aggregate(log);
  result.stats_path = PublishStats(result.stats, models_dir);
  return result;
}

}  // namespace jobstd
