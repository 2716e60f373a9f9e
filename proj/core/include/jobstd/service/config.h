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

#ifndef JOBSTD_SERVICE_CONFIG_H_
#define JOBSTD_SERVICE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>

#include "jobstd/entity_type.h"
#include "jobstd/wire.h"

namespace jobstd {

// Deployment configuration. Relative paths are resolved against the
// directory of the configuration file.
struct ServiceConfig {
  std::filesystem::path taxonomy;
  std::filesystem::path embeddings;
  std::filesystem::path models_dir;
  std::filesystem::path event_log;
  std::filesystem::path snapshot_store;
  int64_t taxonomy_version = 1;
  // Suggestions per section. A company section never has more than one.
  std::map<EntityType, size_t> k = {{EntityType::kTitle, 5},
                                    {EntityType::kSkill, 10},
                                    {EntityType::kCompany, 1},
                                    {EntityType::kQuestion, 3}};
  // How long served feature snapshots stay available for feedback.
  int feedback_window_days = 7;

  size_t KFor(EntityType type) const;
};

// Reads {"taxonomy", "embeddings", "models_dir", "event_log",
// "snapshot_store", "taxonomy_version", "k": {"title": 5, ...},
// "feedback_window_days"}. Throws Error(kInvalidArgument).
ServiceConfig ServiceConfigFromJson(const Json &json,
                                    const std::filesystem::path &base_dir);
ServiceConfig LoadServiceConfig(const std::filesystem::path &path);

}  // namespace jobstd

#endif  // JOBSTD_SERVICE_CONFIG_H_
