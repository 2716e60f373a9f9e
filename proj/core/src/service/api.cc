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

#include "jobstd/service/api.h"

#include <chrono>
#include <cstdio>
#include <random>

#include <spdlog/spdlog.h>

#include "jobstd/error.h"
#include "jobstd/service/standardizer.h"
#include "jobstd/text.h"

namespace jobstd {

int64_t SystemClockMs() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

namespace {

constexpr int64_t kDayMs = 24LL * 60 * 60 * 1000;

HttpResult ErrorResult(int status, std::string_view code,
                       const std::string &message) {
  return {status, {{"error", code}, {"message", message}}};
}

HttpResult BadRequest(const std::string &message) {
  return ErrorResult(400, "bad_request", message);
}

HttpResult NoContent() { return {204, nullptr}; }

std::optional<Json> ParseBody(std::string_view body, std::string *error) {
  try {
    Json json = Json::parse(body);
    if (!json.is_object()) {
      *error = "body must be a JSON object";
      return std::nullopt;
    }
    return json;
  } catch (const Json::exception &e) {
    *error = std::string("invalid JSON: ") + e.what();
    return std::nullopt;
  }
}

}  // namespace

JobApi::JobApi(ModelRegistry &registry, const ServiceConfig &config,
               Clock clock)
    : registry_(registry),
      config_(config),
      clock_(std::move(clock)),
      log_(config.event_log),
      store_(config.snapshot_store, config.feedback_window_days * kDayMs) {
  // Suggestion ids only need to be unique per deployment; a random prefix
  // keeps restarts from reusing ids already in the snapshot store.
  std::random_device device;
  char prefix[32];
  std::snprintf(prefix, sizeof(prefix), "%08x%08x", device(), device());
  id_prefix_ = prefix;
}

std::string JobApi::NextSuggestionId() {
  return "s-" + id_prefix_ + "-" + std::to_string(++id_counter_);
}

void JobApi::Log(std::span<const FeedbackEvent> events) {
  std::lock_guard<std::mutex> lock(log_mu_);
  log_.AppendBatch(events);
}

HttpResult JobApi::Standardize(std::string_view body) {
  std::string error;
  std::optional<Json> json = ParseBody(body, &error);
  if (!json) return BadRequest(error);
  JobPosting posting;
  try {
    posting = PostingFromJson(*json);
  } catch (const Error &e) {
    return BadRequest(e.what());
  }
  std::shared_ptr<const ServingState> state = registry_.Snapshot();
  if (std::vector<EntityType> missing = MissingModels(*state, kAllEntityTypes);
      !missing.empty()) {
    return ErrorResult(503, "model_unavailable",
                       "no active model for " +
                           std::string(EntityTypeName(missing.front())));
  }
  StandardizeResult result = jobstd::Standardize(*state, config_, posting);

  const int64_t now = clock_();
  ServedSuggestion served;
  served.suggestion_id = NextSuggestionId();
  served.posting_id = posting.posting_id;
  served.industry = posting.industry;
  served.served_at_ms = now;
  std::vector<FeedbackEvent> events;
  for (const auto &[type, section] : result.sections) {
    std::map<std::string, const FeatureVector *> features;
    for (const ScoredCandidate &c : section.candidates) {
      features[c.key.id] = &c.features;
    }
    for (const RankedSuggestion &s : section.suggestions) {
      const FeatureVector &x = *features.at(s.entity_id);
      served.snapshots[{type, s.entity_id}] = x;
      FeedbackEvent e;
      e.suggestion_id = served.suggestion_id;
      e.posting_id = posting.posting_id;
      e.entity_type = type;
      e.entity_id = s.entity_id;
      e.action = FeedbackAction::kShown;
      e.event_id = MakeEventId(e.suggestion_id, type, s.entity_id, e.action);
      e.industry = posting.industry;
      e.feature_snapshot.assign(x.values.begin(), x.values.end());
      e.schema_version = x.schema_version;
      e.timestamp_ms = now;
      events.push_back(std::move(e));
    }
  }
  store_.Put(served);
  Log(events);

  Json response = SectionsJson(result, *state->taxonomy);
  response["suggestion_id"] = served.suggestion_id;
  response["posting_id"] = posting.posting_id;
  Json versions = Json::object();
  for (const auto &[type, version] : result.model_versions) {
    versions[std::string(EntityTypeName(type))] = version;
  }
  versions["classifier"] = state->classifier_version;
  versions["stats"] = state->stats_version;
  response["model_versions"] = versions;
  response["taxonomy_version"] = result.taxonomy_version;
  return {200, response};
}

HttpResult JobApi::Typeahead(std::string_view query) {
  if (Normalize(query).empty()) return BadRequest("q must contain a word");
  std::shared_ptr<const ServingState> state = registry_.Snapshot();
  Json hits = Json::array();
  for (const TypeaheadHit &hit : state->typeahead->Complete(query, 10)) {
    hits.push_back({{"id", hit.id}, {"name", hit.name}});
  }
  return {200, hits};
}

HttpResult JobApi::Feedback(std::string_view body) {
  std::string error;
  std::optional<Json> json = ParseBody(body, &error);
  if (!json) return BadRequest(error);
  std::string suggestion_id;
  std::string entity_id;
  std::optional<EntityType> type;
  std::optional<FeedbackAction> action;
  std::optional<std::string> replacement;
  try {
    suggestion_id = json->at("suggestion_id").get<std::string>();
    type = ParseEntityType(json->at("entity_type").get<std::string>());
    entity_id = json->at("entity_id").get<std::string>();
    action = ParseFeedbackAction(json->at("action").get<std::string>());
    if (json->contains("replacement_entity_id") &&
        !(*json)["replacement_entity_id"].is_null()) {
      replacement = (*json)["replacement_entity_id"].get<std::string>();
    }
  } catch (const Json::exception &e) {
    return BadRequest(e.what());
  }
  if (!type) return BadRequest("unknown entity_type");
  if (!action || *action == FeedbackAction::kShown) {
    return BadRequest("action must be accepted, rejected or overridden");
  }
  if ((*action == FeedbackAction::kOverridden) != replacement.has_value()) {
    return BadRequest(
        "replacement_entity_id is required exactly when action is overridden");
  }
  if (replacement && *replacement == entity_id) {
    return BadRequest("replacement_entity_id must differ from entity_id");
  }

  std::optional<ServedSuggestion> served = store_.Get(suggestion_id, clock_());
  if (!served) {
    return ErrorResult(404, "not_found",
                       "unknown or expired suggestion_id '" + suggestion_id + "'");
  }
  auto snapshot = served->snapshots.find({*type, entity_id});
  if (snapshot == served->snapshots.end()) {
    return BadRequest("entity was not served under this suggestion_id");
  }
  if (replacement &&
      registry_.Snapshot()->taxonomy->Lookup(*type, *replacement) == nullptr) {
    return BadRequest("replacement_entity_id is not in the taxonomy");
  }

  FeedbackEvent e;
  e.suggestion_id = suggestion_id;
  e.posting_id = served->posting_id;
  e.entity_type = *type;
  e.entity_id = entity_id;
  e.action = *action;
  e.replacement_entity_id = replacement;
  e.event_id = MakeEventId(suggestion_id, *type, entity_id, *action);
  e.industry = served->industry;
  const FeatureVector &x = snapshot->second;
  e.feature_snapshot.assign(x.values.begin(), x.values.end());
  e.schema_version = x.schema_version;
  e.timestamp_ms = clock_();
  {
    std::lock_guard<std::mutex> lock(log_mu_);
    // Repeated feedback is acknowledged without a second event.
    if (!log_.Contains(e.event_id)) log_.Append(e);
  }
  return NoContent();
}

HttpResult JobApi::Activate(std::string_view body) {
  std::string error;
  std::optional<Json> json = ParseBody(body, &error);
  if (!json) return BadRequest(error);
  std::string target;
  int64_t version = 0;
  try {
    target = json->at("entity_type").get<std::string>();
    version = json->at("version").get<int64_t>();
  } catch (const Json::exception &e) {
    return BadRequest(e.what());
  }
  try {
    if (target == "classifier") {
      registry_.ActivateClassifier(version);
    } else if (target == "stats") {
      registry_.ActivateStats(version);
    } else if (std::optional<EntityType> type = ParseEntityType(target)) {
      registry_.Activate(*type, version);
    } else {
      return BadRequest("unknown entity_type '" + target + "'");
    }
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kNotFound) {
      return ErrorResult(404, "not_found", e.what());
    }
    spdlog::error("activation failed: {}", e.what());
    return ErrorResult(500, "activation_failed", e.what());
  }
  return NoContent();
}

HttpResult JobApi::Health() {
  std::shared_ptr<const ServingState> state = registry_.Snapshot();
  Json versions = Json::object();
  for (const auto &[type, ranker] : state->rankers) {
    versions[std::string(EntityTypeName(type))] = ranker.version;
  }
  return {200,
          {{"status", "ok"},
           {"taxonomy_version", state->taxonomy->version()},
           {"model_versions", versions}}};
}

}  // namespace jobstd
