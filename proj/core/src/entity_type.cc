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

#include "jobstd/entity_type.h"

#include "jobstd/error.h"

namespace jobstd {

std::string_view EntityTypeName(EntityType type) {
  switch (type) {
    case EntityType::kTitle:
      return "title";
    case EntityType::kSkill:
      return "skill";
    case EntityType::kCompany:
      return "company";
    case EntityType::kQuestion:
      return "question";
  }
  return "unknown";
}

std::optional<EntityType> ParseEntityType(std::string_view name) {
  for (EntityType type : kAllEntityTypes) {
    if (EntityTypeName(type) == name) return type;
  }
  return std::nullopt;
}

EntityType EntityTypeFromName(std::string_view name) {
  auto type = ParseEntityType(name);
  if (!type) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown entity type '" + std::string(name) + "'");
  }
  return *type;
}

std::string ToString(const EntityKey &key) {
  return std::string(EntityTypeName(key.type)) + ":" + key.id;
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRecord:
      return "E_MALFORMED_RECORD";
    case ErrorCode::kDuplicateId:
      return "E_DUPLICATE_ID";
    case ErrorCode::kEmptyAlias:
      return "E_EMPTY_ALIAS";
    case ErrorCode::kEmptyAliasSet:
      return "E_EMPTY_ALIAS_SET";
    case ErrorCode::kUndefinedStats:
      return "E_UNDEFINED_STATS";
    case ErrorCode::kSchemaMismatch:
      return "E_SCHEMA_MISMATCH";
    case ErrorCode::kDegenerateData:
      return "E_DEGENERATE_DATA";
    case ErrorCode::kUntrained:
      return "E_UNTRAINED";
    case ErrorCode::kDuplicateEventId:
      return "E_DUPLICATE_EVENT_ID";
    case ErrorCode::kInvalidEvent:
      return "E_INVALID_EVENT";
    case ErrorCode::kInvalidArgument:
      return "E_INVALID_ARGUMENT";
    case ErrorCode::kNotFound:
      return "E_NOT_FOUND";
    case ErrorCode::kIo:
      return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace jobstd
