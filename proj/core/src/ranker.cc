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

#include "jobstd/ranker.h"

#include <algorithm>

#include "jobstd/error.h"
#include "jobstd/logistic.h"

namespace jobstd {

std::string_view ModelKindName(const RankModel &model) {
  return std::holds_alternative<LinearModel>(model) ? "linear" : "gbdt";
}

int SchemaVersion(const RankModel &model) {
  return std::visit([](const auto &m) { return m.schema_version; }, model);
}

double Margin(const RankModel &model, const FeatureVector &x) {
  return std::visit([&](const auto &m) { return m.Margin(x); }, model);
}

namespace {

void CheckSchema(const RankModel &model, const FeatureVector &x) {
  if (SchemaVersion(model) != x.schema_version) {
    throw Error(ErrorCode::kSchemaMismatch,
                std::string(ModelKindName(model)) + " model schema " +
                    std::to_string(SchemaVersion(model)) + " vs features " +
                    std::to_string(x.schema_version));
  }
}

}  // namespace

double Score(const RankModel &model, const FeatureVector &x) {
  CheckSchema(model, x);
  return Sigmoid(Margin(model, x));
}

std::vector<RankedSuggestion> RankByScore(
    std::vector<std::pair<EntityKey, double>> scored, size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  auto better = [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first.id < b.first.id;
  };
  size_t n = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + n, scored.end(), better);
  std::vector<RankedSuggestion> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back({scored[i].first.type, scored[i].first.id, scored[i].second,
                   static_cast<int>(i + 1)});
  }
  return out;
}

std::vector<RankedSuggestion> Rank(const RankModel &model,
                                   std::span<const ScoredCandidate> candidates,
                                   size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  // Order by margin rather than probability: the sigmoid saturates, and
  // distinct margins must not collapse into ties.
  std::vector<std::pair<EntityKey, double>> margins;
  margins.reserve(candidates.size());
  for (const ScoredCandidate &c : candidates) {
    CheckSchema(model, c.features);
    margins.emplace_back(c.key, Margin(model, c.features));
  }
  std::vector<RankedSuggestion> ranked = RankByScore(std::move(margins), k);
  for (RankedSuggestion &s : ranked) s.score = Sigmoid(s.score);
  return ranked;
}

}  // namespace jobstd
