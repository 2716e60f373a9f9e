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

#include "jobstd/feedback.h"

#include <fcntl.h>
#include <unistd.h>

#include <cmath>
#include <fstream>
#include <map>
#include <tuple>

#include "jobstd/error.h"
#include "jobstd/wire.h"

namespace jobstd {

std::string_view FeedbackActionName(FeedbackAction action) {
  switch (action) {
    case FeedbackAction::kShown:
      return "shown";
    case FeedbackAction::kAccepted:
      return "accepted";
    case FeedbackAction::kRejected:
      return "rejected";
    case FeedbackAction::kOverridden:
      return "overridden";
  }
  return "shown";
}

std::optional<FeedbackAction> ParseFeedbackAction(std::string_view name) {
  for (FeedbackAction a :
       {FeedbackAction::kShown, FeedbackAction::kAccepted,
        FeedbackAction::kRejected, FeedbackAction::kOverridden}) {
    if (FeedbackActionName(a) == name) return a;
  }
  return std::nullopt;
}

std::string MakeEventId(std::string_view suggestion_id, EntityType type,
                        std::string_view entity_id, FeedbackAction action) {
  std::string id(suggestion_id);
  id += ':';
  id += EntityTypeName(type);
  id += ':';
  id += entity_id;
  id += ':';
  id += FeedbackActionName(action);
  return id;
}

void ValidateEvent(const FeedbackEvent &e) {
  auto fail = [&](const std::string &why) {
    throw Error(ErrorCode::kInvalidEvent, "event '" + e.event_id + "': " + why);
  };
  if (e.event_id.empty()) fail("empty event_id");
  if (e.suggestion_id.empty()) fail("empty suggestion_id");
  if (e.entity_id.empty()) fail("empty entity_id");
  if (e.action == FeedbackAction::kOverridden) {
    if (!e.replacement_entity_id || e.replacement_entity_id->empty()) {
      fail("overridden without replacement_entity_id");
    }
    if (*e.replacement_entity_id == e.entity_id) {
      fail("replacement_entity_id equals entity_id");
    }
  } else if (e.replacement_entity_id) {
    fail("replacement_entity_id is only allowed when overridden");
  }
  if (e.schema_version != kFeatureSchemaVersion) {
    fail("unsupported schema_version " + std::to_string(e.schema_version));
  }
  if (e.feature_snapshot.size() != kFeatureCount) {
    fail("feature_snapshot must have " + std::to_string(kFeatureCount) +
         " values");
  }
  for (double v : e.feature_snapshot) {
    if (!std::isfinite(v)) fail("non-finite feature value");
  }
}

EventLog::EventLog(std::filesystem::path path) : path_(std::move(path)) {
  for (const FeedbackEvent &e : ReadEvents(path_)) ids_.insert(e.event_id);
  if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  file_ = std::fopen(path_.c_str(), "ab");
  if (file_ == nullptr) {
    throw Error(ErrorCode::kIo, "cannot open event log " + path_.string());
  }
}

EventLog::~EventLog() {
  if (file_ != nullptr) std::fclose(file_);
}

void EventLog::Write(const std::string &lines) {
  if (std::fwrite(lines.data(), 1, lines.size(), file_) != lines.size() ||
      std::fflush(file_) != 0 || ::fsync(::fileno(file_)) != 0) {
    throw Error(ErrorCode::kIo, "append failed: " + path_.string());
  }
}

void EventLog::Append(const FeedbackEvent &event) {
  AppendBatch(std::span<const FeedbackEvent>(&event, 1));
}

void EventLog::AppendBatch(std::span<const FeedbackEvent> events) {
  std::unordered_set<std::string> batch;
  std::string lines;
  for (const FeedbackEvent &event : events) {
    ValidateEvent(event);
    if (ids_.contains(event.event_id) || !batch.insert(event.event_id).second) {
      throw Error(ErrorCode::kDuplicateEventId,
                  "duplicate event id '" + event.event_id + "'");
    }
    lines += EventToLine(event);
    lines += '\n';
  }
  if (lines.empty()) return;
  Write(lines);
  ids_.insert(batch.begin(), batch.end());
}

std::vector<FeedbackEvent> ReadEvents(std::istream &in) {
  std::vector<FeedbackEvent> out;
  std::unordered_set<std::string> seen;
  ForEachJsonLine(in, [&](const Json &json, size_t) {
    FeedbackEvent e = EventFromJson(json);
    ValidateEvent(e);
    if (!seen.insert(e.event_id).second) {
      throw Error(ErrorCode::kDuplicateEventId,
                  "duplicate event id '" + e.event_id + "'");
    }
    out.push_back(std::move(e));
  });
  return out;
}

std::vector<FeedbackEvent> ReadEvents(const std::filesystem::path &path) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return ReadEvents(in);
}

MarketStats Aggregate(std::span<const FeedbackEvent> events) {
  MarketStats stats;
  for (const FeedbackEvent &e : events) {
    stats.RecordShown(e.key(), e.industry);
    if (e.action == FeedbackAction::kAccepted) {
      stats.RecordAccepted(e.key(), e.industry);
    }
  }
  return stats;
}

namespace {

TrainingExample FromSnapshot(const FeedbackEvent &e, const std::string &id,
                             const std::vector<double> &snapshot, int label,
                             double weight) {
  if (e.schema_version != kFeatureSchemaVersion ||
      snapshot.size() != kFeatureCount) {
    throw Error(ErrorCode::kSchemaMismatch,
                "event '" + e.event_id + "' has feature schema " +
                    std::to_string(e.schema_version));
  }
  TrainingExample ex;
  std::copy(snapshot.begin(), snapshot.end(), ex.features.values.begin());
  ex.label = label;
  ex.weight = weight;
  ex.source = ExampleSource::kFeedback;
  ex.group = e.posting_id;
  ex.entity_type = e.entity_type;
  ex.entity_id = id;
  return ex;
}

}  // namespace

std::vector<TrainingExample> ToTrainingExamples(
    std::span<const FeedbackEvent> events, double feedback_weight) {
  // (suggestion, type, id) -> snapshot served with it.
  std::map<std::tuple<std::string, EntityType, std::string>,
           const FeedbackEvent *>
      shown;
  for (const FeedbackEvent &e : events) {
    if (e.action == FeedbackAction::kShown) {
      shown.try_emplace({e.suggestion_id, e.entity_type, e.entity_id}, &e);
    }
  }
  std::vector<TrainingExample> out;
  for (const FeedbackEvent &e : events) {
    switch (e.action) {
      case FeedbackAction::kShown:
        break;
      case FeedbackAction::kAccepted:
        out.push_back(FromSnapshot(e, e.entity_id, e.feature_snapshot, 1,
                                   feedback_weight));
        break;
      case FeedbackAction::kRejected:
        out.push_back(FromSnapshot(e, e.entity_id, e.feature_snapshot, 0,
                                   feedback_weight));
        break;
      case FeedbackAction::kOverridden: {
        out.push_back(FromSnapshot(e, e.entity_id, e.feature_snapshot, 0,
                                   feedback_weight));
        auto it = shown.find(
            {e.suggestion_id, e.entity_type, e.replacement_entity_id.value()});
        if (it != shown.end()) {
          out.push_back(FromSnapshot(*it->second, it->second->entity_id,
                                     it->second->feature_snapshot, 1,
                                     feedback_weight));
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace jobstd
