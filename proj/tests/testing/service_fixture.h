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

// Helpers for tests that run the serving stack against a scratch models
// directory.

#ifndef JOBSTD_TESTS_TESTING_SERVICE_FIXTURE_H_
#define JOBSTD_TESTS_TESTING_SERVICE_FIXTURE_H_

#include <cstdint>
#include <filesystem>

#include "jobstd/linear_model.h"
#include "jobstd/question.h"
#include "jobstd/service/config.h"

namespace jobstd::testing {

// A ranker whose margin is `bias` for every input.
LinearModel ConstantModel(double bias);

// Writes a constant ranker with margin `bias` as `version` of every entity
// type under `models_dir`.
void WriteConstantRankers(const std::filesystem::path &models_dir,
                          int64_t version, double bias);

// A question classifier trained on generated sentences (cached).
const QuestionModel &SampleQuestionModel();
void WriteClassifier(const std::filesystem::path &models_dir, int64_t version);

// Sample taxonomy and embeddings, with everything else under `models_dir`.
ServiceConfig MakeServiceConfig(const std::filesystem::path &models_dir);

}  // namespace jobstd::testing

#endif  // JOBSTD_TESTS_TESTING_SERVICE_FIXTURE_H_
