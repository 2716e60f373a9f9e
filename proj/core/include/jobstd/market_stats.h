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

#ifndef JOBSTD_MARKET_STATS_H_
#define JOBSTD_MARKET_STATS_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "jobstd/entity_type.h"

namespace jobstd {

inline constexpr double kPmiAlpha = 0.5;

struct AcceptanceCounter {
  int64_t shown = 0;
  int64_t accepted = 0;

  bool operator==(const AcceptanceCounter &) const = default;
};

// Market-level counters built from feedback: industry/entity co-occurrence
// of accepted suggestions (for PMI) and per-industry impression and
// acceptance counts (for acceptance rates).
class MarketStats {
 public:
  using PairKey = std::pair<std::string, EntityKey>;        // industry, entity
  using AcceptanceKey = std::pair<EntityKey, std::string>;  // entity, industry

  int64_t total() const { return total_; }
  int64_t distinct_pairs() const { return static_cast<int64_t>(pairs_.size()); }
  int64_t industry_count(const std::string &industry) const;
  int64_t entity_count(const EntityKey &entity) const;
  int64_t pair_count(const std::string &industry, const EntityKey &entity) const;
  AcceptanceCounter acceptance(const EntityKey &entity,
                               const std::string &industry) const;

  // One impression of `entity` in `industry`.
  void RecordShown(const EntityKey &entity, const std::string &industry);
  // One acceptance: bumps the acceptance counter and the co-occurrence
  // counts. Callers record the matching impression separately.
  void RecordAccepted(const EntityKey &entity, const std::string &industry);

  // Bulk mutators for deserialization and tests.
  void AddCooccurrence(const std::string &industry, const EntityKey &entity,
                       int64_t count);
  void AddAcceptance(const EntityKey &entity, const std::string &industry,
                     AcceptanceCounter counter);

  const std::map<std::string, int64_t> &industries() const {
    return industries_;
  }
  const std::map<EntityKey, int64_t> &entities() const { return entities_; }
  const std::map<PairKey, int64_t> &pairs() const { return pairs_; }
  const std::map<AcceptanceKey, AcceptanceCounter> &acceptance_counters()
      const {
    return acceptance_;
  }

  bool operator==(const MarketStats &) const = default;

 private:
  int64_t total_ = 0;
  std::map<std::string, int64_t> industries_;
  std::map<EntityKey, int64_t> entities_;
  std::map<PairKey, int64_t> pairs_;
  std::map<AcceptanceKey, AcceptanceCounter> acceptance_;
};

// Raw counts entering the smoothed PMI formula.
struct PmiCounts {
  double pair = 0;            // c_xy
  double x = 0;               // c_x
  double y = 0;               // c_y
  double total = 0;           // N
  double distinct_pairs = 0;  // V
};

// Add-alpha smoothed pointwise mutual information:
//   log( (c_xy + a)(N + aV) / ((c_x + a sqrt V)(c_y + a sqrt V)) )
// Throws Error(kUndefinedStats) if N <= 0.
double Pmi(const PmiCounts &counts, double alpha = kPmiAlpha);

// PMI between an industry and an entity.
double Pmi(const MarketStats &stats, const std::string &industry,
           const EntityKey &entity, double alpha = kPmiAlpha);

// Laplace-smoothed (accepted + 1) / (shown + 2).
double AcceptanceRate(const AcceptanceCounter &counter);
double AcceptanceRate(const MarketStats &stats, const EntityKey &entity,
                      const std::string &industry);

}  // namespace jobstd

#endif  // JOBSTD_MARKET_STATS_H_
