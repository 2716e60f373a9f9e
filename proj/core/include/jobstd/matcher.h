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

#ifndef JOBSTD_MATCHER_H_
#define JOBSTD_MATCHER_H_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jobstd/entity_type.h"
#include "jobstd/taxonomy.h"

namespace jobstd {

// Aho-Corasick automaton over token sequences. Every normalized alias of one
// entity type is a pattern; the alphabet is the set of alias tokens, so
// matches are always aligned to whole tokens.
class Matcher {
 public:
  struct Match {
    size_t start_token = 0;
    size_t end_token = 0;  // exclusive
    uint32_t pattern = 0;
  };

  // Throws Error(kEmptyAliasSet) if the taxonomy has no entity of `type`.
  static Matcher Build(const Taxonomy &taxonomy, EntityType type);

  // All (possibly overlapping) pattern occurrences, ordered by end token and
  // then by decreasing pattern length.
  std::vector<Match> FindAll(std::span<const std::string> tokens) const;

  EntityType entity_type() const { return type_; }
  int64_t taxonomy_version() const { return taxonomy_version_; }
  size_t pattern_count() const { return patterns_.size(); }
  size_t state_count() const { return nodes_.size(); }

  // Normalized alias text of a pattern.
  const std::string &pattern_key(uint32_t pattern) const {
    return patterns_[pattern].key;
  }
  size_t pattern_length(uint32_t pattern) const {
    return patterns_[pattern].length;
  }
  // Sorted ids of every entity that carries the alias.
  const std::vector<std::string> &entity_ids(uint32_t pattern) const {
    return patterns_[pattern].entity_ids;
  }

 private:
  static constexpr uint32_t kRoot = 0;
  static constexpr uint32_t kNone = UINT32_MAX;

  struct Node {
    std::vector<std::pair<uint32_t, uint32_t>> edges;  // sorted by token id
    uint32_t fail = kRoot;
    uint32_t dict = kNone;  // nearest proper suffix state with an output
    int32_t output = -1;    // pattern ending exactly here
    uint32_t depth = 0;
  };

  struct Pattern {
    std::string key;
    size_t length = 0;
    std::vector<std::string> entity_ids;
  };

  uint32_t Next(uint32_t state, uint32_t token) const;
  uint32_t AddEdge(uint32_t state, uint32_t token);

  EntityType type_ = EntityType::kSkill;
  int64_t taxonomy_version_ = 0;
  std::unordered_map<std::string, uint32_t> vocabulary_;
  std::vector<Node> nodes_;
  std::vector<Pattern> patterns_;
};

}  // namespace jobstd

#endif  // JOBSTD_MATCHER_H_
