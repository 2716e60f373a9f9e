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

#ifndef JOBSTD_TAXONOMY_H_
#define JOBSTD_TAXONOMY_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jobstd/entity_type.h"

namespace jobstd {

// One canonical professional entity with its aliases.
struct TaxonomyEntity {
  std::string id;
  EntityType type = EntityType::kSkill;
  std::string canonical_name;
  // Raw alias strings, canonical name first. Distinct after normalization.
  std::vector<std::string> aliases;
  std::map<std::string, std::string> attributes;

  EntityKey key() const { return {type, id}; }

  // Returns the attribute value or an empty string.
  std::string attribute(std::string_view name) const;

  // NormalizeKey() of every alias, in alias order.
  std::vector<std::string> NormalizedAliases() const;
};

// Normalized alias -> sorted ids of the entities carrying it.
using AliasIndex = std::map<std::string, std::vector<std::string>>;

// Validated, immutable professional entity taxonomy.
class Taxonomy {
 public:
  Taxonomy() = default;

  // Validates the entities and builds the lookup tables. Throws Error with
  // kDuplicateId or kEmptyAlias. Aliases are deduplicated by normalized form
  // and the canonical name is always kept as the first alias.
  explicit Taxonomy(std::vector<TaxonomyEntity> entities, int64_t version = 1);

  int64_t version() const { return version_; }
  const std::vector<TaxonomyEntity> &entities() const { return entities_; }
  size_t size() const { return entities_.size(); }
  size_t count(EntityType type) const {
    return counts_[static_cast<size_t>(type)];
  }

  // Returns nullptr when absent.
  const TaxonomyEntity *Lookup(EntityType type, std::string_view id) const;
  const TaxonomyEntity *Lookup(const EntityKey &key) const {
    return Lookup(key.type, key.id);
  }

  // Entities of one type in file order.
  std::vector<const TaxonomyEntity *> OfType(EntityType type) const;

  const AliasIndex &alias_index(EntityType type) const {
    return alias_indexes_[static_cast<size_t>(type)];
  }

  // Field-by-field equality, independent of entity and alias order.
  friend bool operator==(const Taxonomy &a, const Taxonomy &b);

 private:
  int64_t version_ = 1;
  std::vector<TaxonomyEntity> entities_;
  std::array<size_t, 4> counts_{};
  std::array<std::unordered_map<std::string, size_t>, 4> by_id_;
  std::array<AliasIndex, 4> alias_indexes_;
};

// Parses the JSON Lines taxonomy format:
//   {"type": "skill", "id": "s_java", "name": "Java",
//    "aliases": ["Java SE"], "attributes": {...}}
// Blank lines are skipped. Unknown fields are ignored with a warning.
// Titles must carry an "industry" attribute; question types must carry a
// "template" attribute with at most one {placeholder}.
Taxonomy ParseTaxonomy(std::istream &in, int64_t version = 1);
Taxonomy LoadTaxonomy(const std::filesystem::path &path, int64_t version = 1);

void WriteTaxonomy(const Taxonomy &taxonomy, std::ostream &out);

// Builds the alias index for one type from scratch.
AliasIndex BuildAliasIndex(const Taxonomy &taxonomy, EntityType type);

}  // namespace jobstd

#endif  // JOBSTD_TAXONOMY_H_
