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

#ifndef JOBSTD_FEEDBACK_H_
#define JOBSTD_FEEDBACK_H_

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "jobstd/entity_type.h"
#include "jobstd/feature_vector.h"
#include "jobstd/market_stats.h"

namespace jobstd {

enum class FeedbackAction { kShown, kAccepted, kRejected, kOverridden };

// Wire names: "shown", "accepted", "rejected", "overridden".
std::string_view FeedbackActionName(FeedbackAction action);
std::optional<FeedbackAction> ParseFeedbackAction(std::string_view name);

// Immutable record of one user action on a served suggestion, carrying the
// feature values that were served with it.
struct FeedbackEvent {
  std::string event_id;
  std::string suggestion_id;
  std::string posting_id;
  EntityType entity_type = EntityType::kSkill;
  std::string entity_id;
  FeedbackAction action = FeedbackAction::kShown;
  std::optional<std::string> replacement_entity_id;
  std::string industry;
  std::vector<double> feature_snapshot;
  int schema_version = kFeatureSchemaVersion;
  int64_t timestamp_ms = 0;

  EntityKey key() const { return {entity_type, entity_id}; }
  bool operator==(const FeedbackEvent &) const = default;
};

// "<suggestion_id>:<type>:<entity_id>:<action>". Feedback on the same
// suggestion, entity and action shares an id, which makes it idempotent.
std::string MakeEventId(std::string_view suggestion_id, EntityType type,
                        std::string_view entity_id, FeedbackAction action);

// Throws Error(kInvalidEvent) unless ids are non-empty, a replacement is
// present iff the action is kOverridden and differs from the entity, and
// the snapshot has the schema's length with finite values.
void ValidateEvent(const FeedbackEvent &event);

// Append-only JSON Lines event log. Appends are flushed and synced before
// returning. Not internally synchronized: a single writer owns the log.
class EventLog {
 public:
  // Opens (creating if needed) the log and indexes existing event ids.
  // Throws MalformedRecord on a corrupt line and Error(kIo) on I/O failure.
  explicit EventLog(std::filesystem::path path);
  ~EventLog();
  EventLog(const EventLog &) = delete;
  EventLog &operator=(const EventLog &) = delete;

  // Throws Error(kInvalidEvent) or Error(kDuplicateEventId).
  void Append(const FeedbackEvent &event);
  // Appends all events with a single sync, or none of them if any is
  // invalid or duplicated.
  void AppendBatch(std::span<const FeedbackEvent> events);
  bool Contains(const std::string &event_id) const {
    return ids_.contains(event_id);
  }
  size_t size() const { return ids_.size(); }
  const std::filesystem::path &path() const { return path_; }

 private:
  void Write(const std::string &lines);

  std::filesystem::path path_;
  std::FILE *file_ = nullptr;
  std::unordered_set<std::string> ids_;
};

std::vector<FeedbackEvent> ReadEvents(std::istream &in);
// A missing file reads as an empty log.
std::vector<FeedbackEvent> ReadEvents(const std::filesystem::path &path);

// Market statistics implied by a log: every event counts one impression of
// its entity; accepted events also count an acceptance and one
// (industry, entity) co-occurrence.
MarketStats Aggregate(std::span<const FeedbackEvent> events);

// Training examples implied by a log, in log order: accepted -> positive,
// rejected -> negative, overridden -> negative plus a positive for the
// replacement when it was shown (with a snapshot) under the same
// suggestion id. Shown events yield nothing. Throws Error(kSchemaMismatch)
// on a snapshot from another feature schema.
std::vector<TrainingExample> ToTrainingExamples(
    std::span<const FeedbackEvent> events, double feedback_weight = 2.0);

}  // namespace jobstd

#endif  // JOBSTD_FEEDBACK_H_
