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

#ifndef JOBSTD_SERVICE_SUGGESTION_STORE_H_
#define JOBSTD_SERVICE_SUGGESTION_STORE_H_

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "jobstd/entity_type.h"
#include "jobstd/feature_vector.h"

namespace jobstd {

// What was served under one suggestion id: the feature snapshot of every
// suggestion shown, for joining later feedback.
struct ServedSuggestion {
  std::string suggestion_id;
  std::string posting_id;
  std::string industry;
  int64_t served_at_ms = 0;
  std::map<EntityKey, FeatureVector> snapshots;

  bool operator==(const ServedSuggestion &) const = default;
};

// Snapshot store keyed by suggestion id, persisted as an append-only JSON
// Lines file so feedback can be joined after a restart. Thread-safe.
class SuggestionStore {
 public:
  // Loads existing records (later records for an id replace earlier ones)
  // and opens the file for appending. Throws MalformedRecord / Error(kIo).
  SuggestionStore(std::filesystem::path path, int64_t window_ms);
  ~SuggestionStore();
  SuggestionStore(const SuggestionStore &) = delete;
  SuggestionStore &operator=(const SuggestionStore &) = delete;

  void Put(const ServedSuggestion &record);

  // The record, unless unknown or older than the window at `now_ms`.
  std::optional<ServedSuggestion> Get(const std::string &suggestion_id,
                                      int64_t now_ms) const;

  size_t size() const;

 private:
  std::filesystem::path path_;
  int64_t window_ms_;
  mutable std::mutex mu_;
  std::FILE *file_ = nullptr;
  std::unordered_map<std::string, ServedSuggestion> records_;
};

}  // namespace jobstd

#endif  // JOBSTD_SERVICE_SUGGESTION_STORE_H_
