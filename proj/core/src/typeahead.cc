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

#include "jobstd/typeahead.h"

#include <algorithm>
#include <set>

#include "jobstd/text.h"

namespace jobstd {
namespace {

bool AliasMatches(const std::vector<std::string> &alias,
                  const std::vector<std::string> &query) {
  if (query.size() > alias.size()) return false;
  for (size_t start = 0; start + query.size() <= alias.size(); ++start) {
    bool ok = true;
    for (size_t j = 0; j + 1 < query.size() && ok; ++j) {
      ok = alias[start + j] == query[j];
    }
    if (ok && alias[start + query.size() - 1].starts_with(query.back())) {
      return true;
    }
  }
  return false;
}

}  // namespace

TitleTypeahead::TitleTypeahead(const Taxonomy &taxonomy) {
  for (const TaxonomyEntity *entity : taxonomy.OfType(EntityType::kTitle)) {
    Entry entry{entity->id, entity->canonical_name, {}};
    for (const std::string &alias : entity->aliases) {
      entry.aliases.push_back(Normalize(alias).tokens);
    }
    size_t index = entries_.size();
    std::set<std::string> seen;
    for (const auto &alias : entry.aliases) {
      for (const std::string &token : alias) {
        if (seen.insert(token).second) tokens_.emplace_back(token, index);
      }
    }
    entries_.push_back(std::move(entry));
  }
  std::sort(tokens_.begin(), tokens_.end());
}

std::vector<TypeaheadHit> TitleTypeahead::Complete(std::string_view query,
                                                   size_t limit) const {
  std::vector<std::string> q = Normalize(query).tokens;
  if (q.empty()) return {};

  // Entries owning a token that starts with the first query token (or equals
  // it, for multi-token queries) are verified against the full query.
  const std::string &first = q.front();
  std::set<size_t> pool;
  for (auto it = std::lower_bound(tokens_.begin(), tokens_.end(),
                                  std::make_pair(first, size_t{0}));
       it != tokens_.end() && it->first.starts_with(first); ++it) {
    pool.insert(it->second);
  }

  std::vector<const Entry *> hits;
  for (size_t index : pool) {
    const Entry &entry = entries_[index];
    for (const auto &alias : entry.aliases) {
      if (AliasMatches(alias, q)) {
        hits.push_back(&entry);
        break;
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Entry *a, const Entry *b) {
    if (a->name.size() != b->name.size()) {
      return a->name.size() < b->name.size();
    }
    if (a->name != b->name) return a->name < b->name;
    return a->id < b->id;
  });
  std::vector<TypeaheadHit> out;
  for (size_t i = 0; i < hits.size() && i < limit; ++i) {
    out.push_back({hits[i]->id, hits[i]->name});
  }
  return out;
}

}  // namespace jobstd
