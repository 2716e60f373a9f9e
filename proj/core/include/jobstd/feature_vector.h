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

#ifndef JOBSTD_FEATURE_VECTOR_H_
#define JOBSTD_FEATURE_VECTOR_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "jobstd/entity_type.h"

namespace jobstd {

// Bumped whenever the feature schema below changes. Written into every
// model file and feedback event.
inline constexpr int kFeatureSchemaVersion = 1;
inline constexpr size_t kFeatureCount = 14;

enum FeatureIndex : size_t {
  kNgramSim = 0,
  kEditSim,
  kExactMatch,
  kMentionCount,
  kFirstPosFrac,
  kInTitle,
  kEmailDomainMatch,
  kLocationMatch,
  kSemPostingCos,
  kSemContextCos,
  kCoherenceCos,
  kPmiIndustry,
  kAcceptanceRateSmoothed,
  kLogShown,
};

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "ngram_sim",        "edit_sim",         "exact_match",
    "mention_count",    "first_pos_frac",   "in_title",
    "email_domain_match", "location_match", "sem_posting_cos",
    "sem_context_cos",  "coherence_cos",    "pmi_industry",
    "acceptance_rate_smoothed", "log_shown"};

// Bits describing which defaults were used while extracting.
enum FeatureFlag : uint32_t {
  kFlagPmiUndefined = 1u << 0,
  kFlagNoEntityVector = 1u << 1,
  kFlagPostingOov = 1u << 2,
  kFlagContextOov = 1u << 3,
};

struct FeatureVector {
  std::array<double, kFeatureCount> values{};
  int schema_version = kFeatureSchemaVersion;
  uint32_t flags = 0;

  double &operator[](size_t i) { return values[i]; }
  double operator[](size_t i) const { return values[i]; }
  std::span<const double> span() const { return values; }

  bool operator==(const FeatureVector &) const = default;
};

enum class ExampleSource { kSeed, kFeedback };

std::string_view ExampleSourceName(ExampleSource source);

// One pointwise learning-to-rank example.
struct TrainingExample {
  FeatureVector features;
  int label = 0;  // 0 or 1
  double weight = 1.0;
  ExampleSource source = ExampleSource::kSeed;

  // Optional provenance, used for grouping and filtering.
  std::string group;  // posting id
  std::optional<EntityType> entity_type;
  std::string entity_id;

  bool operator==(const TrainingExample &) const = default;
};

}  // namespace jobstd

#endif  // JOBSTD_FEATURE_VECTOR_H_
