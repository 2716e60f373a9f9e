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

#include "jobstd/service/config.h"

#include "jobstd/error.h"

namespace jobstd {

size_t ServiceConfig::KFor(EntityType type) const {
  auto it = k.find(type);
  size_t value = it == k.end() ? 1 : it->second;
  return type == EntityType::kCompany ? std::min<size_t>(value, 1) : value;
}

ServiceConfig ServiceConfigFromJson(const Json &json,
                                    const std::filesystem::path &base_dir) {
  if (!json.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "config must be a JSON object");
  }
  ServiceConfig config;
  auto path = [&](const char *name, bool required) {
    if (!json.contains(name)) {
      if (required) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("config: missing '") + name + "'");
      }
      return std::filesystem::path();
    }
    std::filesystem::path p = json[name].get<std::string>();
    return p.is_absolute() ? p : base_dir / p;
  };
  try {
    config.taxonomy = path("taxonomy", true);
    config.embeddings = path("embeddings", true);
    config.models_dir = path("models_dir", true);
    config.event_log = path("event_log", false);
    config.snapshot_store = path("snapshot_store", false);
    if (config.event_log.empty()) config.event_log = config.models_dir / "events.jsonl";
    if (config.snapshot_store.empty()) {
      config.snapshot_store = config.models_dir / "suggestions.jsonl";
    }
    config.taxonomy_version = json.value("taxonomy_version", int64_t{1});
    config.feedback_window_days = json.value("feedback_window_days", 7);
    if (json.contains("k")) {
      for (const auto &[name, value] : json["k"].items()) {
        int64_t k = value.get<int64_t>();
        if (k < 1) {
          throw Error(ErrorCode::kInvalidArgument, "config: k must be >= 1");
        }
        config.k[EntityTypeFromName(name)] = static_cast<size_t>(k);
      }
    }
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("config: ") + e.what());
  }
  if (config.feedback_window_days < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "config: feedback_window_days must be >= 0");
  }
  return config;
}

ServiceConfig LoadServiceConfig(const std::filesystem::path &path) {
  return ServiceConfigFromJson(ReadJsonFile(path),
                               std::filesystem::absolute(path).parent_path());
}

}  // namespace jobstd
