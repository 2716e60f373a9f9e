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

#ifndef JOBSTD_RANKER_H_
#define JOBSTD_RANKER_H_

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jobstd/entity_type.h"
#include "jobstd/feature_vector.h"
#include "jobstd/gbdt.h"
#include "jobstd/linear_model.h"

namespace jobstd {

// Either ranker kind; every entity type can be served by either.
using RankModel = std::variant<LinearModel, GbdtModel>;

// "linear" or "gbdt".
std::string_view ModelKindName(const RankModel &model);
int SchemaVersion(const RankModel &model);

double Margin(const RankModel &model, const FeatureVector &x);
// Sigmoid of the margin, in (0, 1). Throws Error(kSchemaMismatch).
double Score(const RankModel &model, const FeatureVector &x);

struct RankedSuggestion {
  EntityType entity_type = EntityType::kSkill;
  std::string entity_id;
  double score = 0.0;
  int rank = 0;  // 1-based

  bool operator==(const RankedSuggestion &) const = default;
};

struct ScoredCandidate {
  EntityKey key;
  FeatureVector features;
};

// Orders (key, score) pairs by score descending, then entity id ascending,
// keeps the first k and assigns ranks 1..k.
std::vector<RankedSuggestion> RankByScore(
    std::vector<std::pair<EntityKey, double>> scored, size_t k);

// Scores every candidate and returns the top min(k, n), ordered by margin
// descending (so by score, without ties from sigmoid saturation), then
// entity id ascending. Throws
// Error(kInvalidArgument) when k is 0.
std::vector<RankedSuggestion> Rank(const RankModel &model,
                                   std::span<const ScoredCandidate> candidates,
                                   size_t k);

}  // namespace jobstd

#endif  // JOBSTD_RANKER_H_
