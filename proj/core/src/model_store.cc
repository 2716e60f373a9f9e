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

#include "jobstd/model_store.h"

#include <algorithm>
#include <charconv>
#include <string>

namespace jobstd {

std::filesystem::path RankerDir(const std::filesystem::path &models_dir,
                                EntityType type) {
  return models_dir / std::string(EntityTypeName(type));
}

std::filesystem::path ClassifierDir(const std::filesystem::path &models_dir) {
  return models_dir / "classifier";
}

std::filesystem::path StatsDir(const std::filesystem::path &models_dir) {
  return models_dir / "stats";
}

std::filesystem::path VersionPath(const std::filesystem::path &dir,
                                  int64_t version) {
  return dir / ("v" + std::to_string(version) + ".json");
}

std::vector<int64_t> ListVersions(const std::filesystem::path &dir) {
  std::vector<int64_t> out;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) return out;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (name.size() < 7 || name[0] != 'v' || !name.ends_with(".json")) continue;
    std::string_view digits(name.data() + 1, name.size() - 6);
    int64_t version = 0;
    auto [end, err] =
        std::from_chars(digits.data(), digits.data() + digits.size(), version);
    if (err == std::errc() && end == digits.data() + digits.size() &&
        version > 0) {
      out.push_back(version);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t LatestVersion(const std::filesystem::path &dir) {
  std::vector<int64_t> versions = ListVersions(dir);
  return versions.empty() ? 0 : versions.back();
}

}  // namespace jobstd
