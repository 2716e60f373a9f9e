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

#include "jobstd/service/stream.h"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "jobstd/error.h"
#include "jobstd/service/standardizer.h"
#include "jobstd/wire.h"

namespace jobstd {

namespace {

struct Item {
  size_t line = 0;
  std::string text;
  std::optional<std::string> output;
  std::string error;
};

void ProcessItem(const ServingState &state, const ServiceConfig &config,
                 Item &item) {
  try {
    JobPosting posting = PostingFromJson(Json::parse(item.text));
    Json sections = SectionsJson(Standardize(state, config, posting), *state.taxonomy);
    Json line = {{"posting_id", posting.posting_id},
                 {"titles", sections["titles"]},
                 {"skills", sections["skills"]},
                 {"company", sections["company"]},
                 {"questions", sections["questions"]}};
    item.output = line.dump();
  } catch (const std::exception &e) {
    item.error = e.what();
  }
}

void ProcessBatch(const ServingState &state, const ServiceConfig &config,
                  std::vector<Item> &batch, size_t threads) {
  threads = std::min(threads, batch.size());
  if (threads <= 1) {
    for (Item &item : batch) ProcessItem(state, config, item);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  for (size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (size_t i = next++; i < batch.size(); i = next++) {
        ProcessItem(state, config, batch[i]);
      }
    });
  }
  for (std::thread &w : workers) w.join();
}

}  // namespace

StreamSummary StreamProcess(const ServingState &state,
                            const ServiceConfig &config, std::istream &in,
                            std::ostream &out, const StreamOptions &options) {
  if (std::vector<EntityType> missing = MissingModels(state, kAllEntityTypes);
      !missing.empty()) {
    throw Error(ErrorCode::kNotFound,
                "no active model for " +
                    std::string(EntityTypeName(missing.front())));
  }
  size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const size_t batch_size = std::max<size_t>(options.batch_size, 1);

  StreamSummary summary;
  std::vector<Item> batch;
  auto flush = [&] {
    ProcessBatch(state, config, batch, threads);
    for (Item &item : batch) {
      if (item.output) {
        out << *item.output << '\n';
        ++summary.processed;
      } else {
        summary.failures.push_back({item.line, std::move(item.error)});
      }
    }
    batch.clear();
  };
  std::string text;
  size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    batch.push_back({line, std::move(text), std::nullopt, {}});
    if (batch.size() >= batch_size) flush();
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading posting stream");
  flush();
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "error writing stream output");
  return summary;
}

}  // namespace jobstd
