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

#ifndef JOBSTD_ENTITY_TYPE_H_
#define JOBSTD_ENTITY_TYPE_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace jobstd {

// The four kinds of professional entity a posting is standardized into.
enum class EntityType { kTitle = 0, kSkill = 1, kCompany = 2, kQuestion = 3 };

inline constexpr std::array<EntityType, 4> kAllEntityTypes = {
    EntityType::kTitle, EntityType::kSkill, EntityType::kCompany,
    EntityType::kQuestion};

// Wire names: "title", "skill", "company", "question".
std::string_view EntityTypeName(EntityType type);
std::optional<EntityType> ParseEntityType(std::string_view name);

// Parses or throws Error(kInvalidArgument).
EntityType EntityTypeFromName(std::string_view name);

// (type, id) pair identifying one taxonomy entity.
struct EntityKey {
  EntityType type = EntityType::kSkill;
  std::string id;

  auto operator<=>(const EntityKey &) const = default;
  bool operator==(const EntityKey &) const = default;
};

// "skill:s_java"
std::string ToString(const EntityKey &key);

}  // namespace jobstd

#endif  // JOBSTD_ENTITY_TYPE_H_
