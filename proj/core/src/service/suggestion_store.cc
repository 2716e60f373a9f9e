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

#include "jobstd/service/suggestion_store.h"

#include <fstream>

#include "jobstd/error.h"
#include "jobstd/wire.h"

namespace jobstd {

namespace {

Json RecordToJson(const ServedSuggestion &r) {
  Json entries = Json::array();
  for (const auto &[key, x] : r.snapshots) {
    entries.push_back({{"type", EntityTypeName(key.type)},
                       {"id", key.id},
                       {"features", FeaturesToJson(x)},
                       {"schema_version", x.schema_version}});
  }
  return {{"suggestion_id", r.suggestion_id},
          {"posting_id", r.posting_id},
          {"industry", r.industry},
          {"served_at", r.served_at_ms},
          {"entries", entries}};
}

ServedSuggestion RecordFromJson(const Json &json) {
  ServedSuggestion r;
  r.suggestion_id = json.at("suggestion_id").get<std::string>();
  r.posting_id = json.at("posting_id").get<std::string>();
  r.industry = json.at("industry").get<std::string>();
  r.served_at_ms = json.at("served_at").get<int64_t>();
  for (const Json &e : json.at("entries")) {
    EntityKey key{EntityTypeFromName(e.at("type").get<std::string>()),
                  e.at("id").get<std::string>()};
    r.snapshots[key] =
        FeaturesFromJson(e.at("features"), e.at("schema_version").get<int>());
  }
  return r;
}

}  // namespace

SuggestionStore::SuggestionStore(std::filesystem::path path, int64_t window_ms)
    : path_(std::move(path)), window_ms_(window_ms) {
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_, std::ios::binary);
    ForEachJsonLine(in, [&](const Json &json, size_t) {
      ServedSuggestion r = RecordFromJson(json);
      records_[r.suggestion_id] = std::move(r);
    });
  }
  if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  file_ = std::fopen(path_.c_str(), "ab");
  if (file_ == nullptr) {
    throw Error(ErrorCode::kIo, "cannot open snapshot store " + path_.string());
  }
}

SuggestionStore::~SuggestionStore() {
  if (file_ != nullptr) std::fclose(file_);
}

void SuggestionStore::Put(const ServedSuggestion &record) {
  std::string line = RecordToJson(record).dump();
  line += '\n';
  std::lock_guard<std::mutex> lock(mu_);
  if (std::fwrite(line.data(), 1, line.size(), file_) != line.size() ||
      std::fflush(file_) != 0) {
    throw Error(ErrorCode::kIo, "snapshot store write failed: " + path_.string());
  }
  records_[record.suggestion_id] = record;
}

std::optional<ServedSuggestion> SuggestionStore::Get(
    const std::string &suggestion_id, int64_t now_ms) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = records_.find(suggestion_id);
  if (it == records_.end()) return std::nullopt;
  if (now_ms - it->second.served_at_ms > window_ms_) return std::nullopt;
  return it->second;
}

size_t SuggestionStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

}  // namespace jobstd
