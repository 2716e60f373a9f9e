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

#include "jobstd/matcher.h"

#include <algorithm>
#include <deque>

#include "jobstd/error.h"
#include "jobstd/text.h"

namespace jobstd {

Matcher Matcher::Build(const Taxonomy &taxonomy, EntityType type) {
  if (taxonomy.count(type) == 0) {
    throw Error(ErrorCode::kEmptyAliasSet,
                "no " + std::string(EntityTypeName(type)) +
                    " entities to build a matcher from");
  }
  Matcher matcher;
  matcher.type_ = type;
  matcher.taxonomy_version_ = taxonomy.version();
  matcher.nodes_.emplace_back();

  // The alias index already groups entity ids per normalized alias, so each
  // alias compiles exactly once.
  for (const auto &[key, ids] : taxonomy.alias_index(type)) {
    NormalizedText text = Normalize(key);
    uint32_t state = kRoot;
    for (const std::string &token : text.tokens) {
      auto [it, inserted] = matcher.vocabulary_.emplace(
          token, static_cast<uint32_t>(matcher.vocabulary_.size()));
      state = matcher.AddEdge(state, it->second);
    }
    auto pattern = static_cast<uint32_t>(matcher.patterns_.size());
    matcher.patterns_.push_back({key, text.tokens.size(), ids});
    matcher.nodes_[state].output = static_cast<int32_t>(pattern);
  }

  // Breadth-first construction of failure and dictionary-suffix links.
  std::deque<uint32_t> queue;
  for (const auto &[token, child] : matcher.nodes_[kRoot].edges) {
    matcher.nodes_[child].fail = kRoot;
    queue.push_back(child);
  }
  while (!queue.empty()) {
    uint32_t state = queue.front();
    queue.pop_front();
    for (const auto &[token, child] : matcher.nodes_[state].edges) {
      uint32_t fallback = matcher.nodes_[state].fail;
      while (fallback != kRoot && matcher.Next(fallback, token) == kNone) {
        fallback = matcher.nodes_[fallback].fail;
      }
      uint32_t target = matcher.Next(fallback, token);
      Node &node = matcher.nodes_[child];
      node.fail = (target == kNone || target == child) ? kRoot : target;
      const Node &fail = matcher.nodes_[node.fail];
      node.dict = fail.output >= 0 ? node.fail : fail.dict;
      queue.push_back(child);
    }
  }
  return matcher;
}

uint32_t Matcher::Next(uint32_t state, uint32_t token) const {
  const auto &edges = nodes_[state].edges;
  auto it = std::lower_bound(
      edges.begin(), edges.end(), token,
      [](const std::pair<uint32_t, uint32_t> &e, uint32_t t) {
        return e.first < t;
      });
  return (it != edges.end() && it->first == token) ? it->second : kNone;
}

uint32_t Matcher::AddEdge(uint32_t state, uint32_t token) {
  uint32_t existing = Next(state, token);
  if (existing != kNone) return existing;
  auto child = static_cast<uint32_t>(nodes_.size());
  nodes_.emplace_back();
  nodes_[child].depth = nodes_[state].depth + 1;
  auto &edges = nodes_[state].edges;
  auto it = std::lower_bound(
      edges.begin(), edges.end(), token,
      [](const std::pair<uint32_t, uint32_t> &e, uint32_t t) {
        return e.first < t;
      });
  edges.insert(it, {token, child});
  return child;
}

std::vector<Matcher::Match> Matcher::FindAll(
    std::span<const std::string> tokens) const {
  std::vector<Match> matches;
  uint32_t state = kRoot;
  for (size_t i = 0; i < tokens.size(); ++i) {
    auto vocab = vocabulary_.find(tokens[i]);
    if (vocab == vocabulary_.end()) {
      // No pattern contains this token, so every partial match dies here.
      state = kRoot;
      continue;
    }
    uint32_t token = vocab->second;
    while (state != kRoot && Next(state, token) == kNone) {
      state = nodes_[state].fail;
    }
    uint32_t next = Next(state, token);
    state = next == kNone ? kRoot : next;

    uint32_t hit = nodes_[state].output >= 0 ? state : nodes_[state].dict;
    while (hit != kNone) {
      const Node &node = nodes_[hit];
      matches.push_back({i + 1 - node.depth, i + 1,
                         static_cast<uint32_t>(node.output)});
      hit = node.dict;
    }
  }
  return matches;
}

}  // namespace jobstd
