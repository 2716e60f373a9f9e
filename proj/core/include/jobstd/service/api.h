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

#ifndef JOBSTD_SERVICE_API_H_
#define JOBSTD_SERVICE_API_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "jobstd/feedback.h"
#include "jobstd/service/config.h"
#include "jobstd/service/registry.h"
#include "jobstd/service/suggestion_store.h"
#include "jobstd/wire.h"

namespace jobstd {

// Transport-independent result of one endpoint call. A null body means no
// content.
struct HttpResult {
  int status = 200;
  Json body;
};

// Milliseconds since the epoch.
using Clock = std::function<int64_t()>;
int64_t SystemClockMs();

// The /v1 JSON API. Handlers are safe to call concurrently: model state is
// read from one registry snapshot per request, and event log writes are
// serialized.
//
//   POST /v1/standardize              JobPosting -> StandardizeResponse
//   GET  /v1/titles/typeahead?q=      -> [{id, name}] (at most 10)
//   POST /v1/feedback                 {suggestion_id, entity_type, entity_id,
//                                      action, replacement_entity_id?} -> 204
//   POST /v1/admin/models/activate    {entity_type, version} -> 204
//                                     (entity_type may also be "classifier"
//                                      or "stats")
class JobApi {
 public:
  JobApi(ModelRegistry &registry, const ServiceConfig &config,
         Clock clock = SystemClockMs);

  HttpResult Standardize(std::string_view body);
  HttpResult Typeahead(std::string_view query);
  HttpResult Feedback(std::string_view body);
  HttpResult Activate(std::string_view body);
  HttpResult Health();

  const EventLog &event_log() const { return log_; }
  const SuggestionStore &suggestions() const { return store_; }

 private:
  std::string NextSuggestionId();
  void Log(std::span<const FeedbackEvent> events);

  ModelRegistry &registry_;
  ServiceConfig config_;
  Clock clock_;
  std::mutex log_mu_;
  EventLog log_;
  SuggestionStore store_;
  std::string id_prefix_;
  std::atomic<uint64_t> id_counter_{0};
};

}  // namespace jobstd

#endif  // JOBSTD_SERVICE_API_H_
