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

#include "jobstd/market_stats.h"

#include <cmath>

#include "jobstd/error.h"

namespace jobstd {
namespace {

template <typename Map, typename Key>
int64_t Get(const Map &map, const Key &key) {
  auto it = map.find(key);
  return it == map.end() ? 0 : it->second;
}

}  // namespace

int64_t MarketStats::industry_count(const std::string &industry) const {
  return Get(industries_, industry);
}

int64_t MarketStats::entity_count(const EntityKey &entity) const {
  return Get(entities_, entity);
}

int64_t MarketStats::pair_count(const std::string &industry,
                                const EntityKey &entity) const {
  return Get(pairs_, PairKey{industry, entity});
}

AcceptanceCounter MarketStats::acceptance(const EntityKey &entity,
                                          const std::string &industry) const {
  auto it = acceptance_.find({entity, industry});
  return it == acceptance_.end() ? AcceptanceCounter{} : it->second;
}

void MarketStats::RecordShown(const EntityKey &entity,
                              const std::string &industry) {
  ++acceptance_[{entity, industry}].shown;
}

void MarketStats::RecordAccepted(const EntityKey &entity,
                                 const std::string &industry) {
  ++acceptance_[{entity, industry}].accepted;
  AddCooccurrence(industry, entity, 1);
}

void MarketStats::AddCooccurrence(const std::string &industry,
                                  const EntityKey &entity, int64_t count) {
  if (count <= 0) return;
  pairs_[{industry, entity}] += count;
  industries_[industry] += count;
  entities_[entity] += count;
  total_ += count;
}

void MarketStats::AddAcceptance(const EntityKey &entity,
                                const std::string &industry,
                                AcceptanceCounter counter) {
  AcceptanceCounter &c = acceptance_[{entity, industry}];
  c.shown += counter.shown;
  c.accepted += counter.accepted;
}

double Pmi(const PmiCounts &counts, double alpha) {
  if (counts.total <= 0) {
    throw Error(ErrorCode::kUndefinedStats, "PMI is undefined when N = 0");
  }
  double root_v = std::sqrt(counts.distinct_pairs);
  double numerator =
      (counts.pair + alpha) * (counts.total + alpha * counts.distinct_pairs);
  double denominator = (counts.x + alpha * root_v) * (counts.y + alpha * root_v);
  return std::log(numerator / denominator);
}

double Pmi(const MarketStats &stats, const std::string &industry,
           const EntityKey &entity, double alpha) {
  PmiCounts counts;
  counts.pair = static_cast<double>(stats.pair_count(industry, entity));
  counts.x = static_cast<double>(stats.industry_count(industry));
  counts.y = static_cast<double>(stats.entity_count(entity));
  counts.total = static_cast<double>(stats.total());
  counts.distinct_pairs = static_cast<double>(stats.distinct_pairs());
  return Pmi(counts, alpha);
}

double AcceptanceRate(const AcceptanceCounter &counter) {
  return (static_cast<double>(counter.accepted) + 1.0) /
         (static_cast<double>(counter.shown) + 2.0);
}

double AcceptanceRate(const MarketStats &stats, const EntityKey &entity,
                      const std::string &industry) {
  return AcceptanceRate(stats.acceptance(entity, industry));
}

}  // namespace jobstd
