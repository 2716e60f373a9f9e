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

#ifndef JOBSTD_SERVICE_STREAM_H_
#define JOBSTD_SERVICE_STREAM_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "jobstd/service/config.h"
#include "jobstd/service/registry.h"

namespace jobstd {

struct StreamFailure {
  size_t line = 0;  // 1-based input line
  std::string reason;
};

struct StreamSummary {
  size_t processed = 0;  // output lines written
  std::vector<StreamFailure> failures;
};

struct StreamOptions {
  size_t batch_size = 256;
  size_t threads = 0;  // 0: hardware concurrency
};

// Reads JSONL postings from `in` and writes one line per valid posting to
// `out`, in input order:
//   {"posting_id", "titles", "skills", "company", "questions"}
// A line that fails to parse or validate is reported in the summary and
// skipped; it does not affect the others. Blank lines are ignored. Throws
// Error(kNotFound) up front if the state is missing a model.
StreamSummary StreamProcess(const ServingState &state,
                            const ServiceConfig &config, std::istream &in,
                            std::ostream &out, const StreamOptions &options = {});

}  // namespace jobstd

#endif  // JOBSTD_SERVICE_STREAM_H_
