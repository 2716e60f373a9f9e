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

#ifndef JOBSTD_MODEL_STORE_H_
#define JOBSTD_MODEL_STORE_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "jobstd/entity_type.h"

// Layout of a models directory:
//   <dir>/<type>/v<N>.json      ranker for one entity type
//   <dir>/classifier/v<N>.json  question sentence classifier
//   <dir>/stats/v<N>.json       market statistics snapshot
// Files are written once and never modified; a new version is a new file.
namespace jobstd {

std::filesystem::path RankerDir(const std::filesystem::path &models_dir,
                                EntityType type);
std::filesystem::path ClassifierDir(const std::filesystem::path &models_dir);
std::filesystem::path StatsDir(const std::filesystem::path &models_dir);

std::filesystem::path VersionPath(const std::filesystem::path &dir,
                                  int64_t version);

// Versions present in `dir`, ascending. A missing directory has none.
std::vector<int64_t> ListVersions(const std::filesystem::path &dir);

// Highest version in `dir`, or 0.
int64_t LatestVersion(const std::filesystem::path &dir);

}  // namespace jobstd

#endif  // JOBSTD_MODEL_STORE_H_
