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

#ifndef JOBSTD_SERVICE_STANDARDIZER_H_
#define JOBSTD_SERVICE_STANDARDIZER_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "jobstd/pipeline.h"
#include "jobstd/service/config.h"
#include "jobstd/service/registry.h"
#include "jobstd/tagger.h"
#include "jobstd/wire.h"

namespace jobstd {

struct StandardizeResult {
  std::map<EntityType, RankedSection> sections;
  std::map<EntityType, int64_t> model_versions;
  int64_t taxonomy_version = 0;
};

// Types among `types` that the state cannot serve (no ranker, or no
// question classifier).
std::vector<EntityType> MissingModels(const ServingState &state,
                                      std::span<const EntityType> types);

// Runs tag -> extract -> rank for each requested type against one state.
// Throws Error(kNotFound) when a model is missing.
StandardizeResult Standardize(const ServingState &state,
                              const ServiceConfig &config,
                              const JobPosting &posting,
                              std::span<const EntityType> types = kAllEntityTypes);

// {"titles": [...], "skills": [...], "company": {...} | null,
//  "questions": [...]}; each suggestion carries entity_type, entity_id,
// name, score and rank, and questions also their question text.
Json SectionsJson(const StandardizeResult &result, const Taxonomy &taxonomy);

}  // namespace jobstd

#endif  // JOBSTD_SERVICE_STANDARDIZER_H_
