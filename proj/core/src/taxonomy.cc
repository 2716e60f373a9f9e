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

#include "jobstd/taxonomy.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "jobstd/error.h"
#include "jobstd/text.h"

namespace jobstd {

using json = nlohmann::json;

namespace {

size_t Slot(EntityType type) { return static_cast<size_t>(type); }

std::string Describe(EntityType type, const std::string &id) {
  return std::string(EntityTypeName(type)) + "/" + id;
}

int CountPlaceholders(std::string_view text) {
  int count = 0;
  size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string_view::npos) {
    size_t close = text.find('}', pos);
    if (close == std::string_view::npos) break;
    ++count;
    pos = close + 1;
  }
  return count;
}

std::string RequireString(const json &record, const char *field, size_t line) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_string()) {
    throw MalformedRecord(line, std::string("missing string field '") + field +
                                    "'");
  }
  return it->get<std::string>();
}

TaxonomyEntity ParseRecord(const json &record, size_t line) {
  if (!record.is_object()) throw MalformedRecord(line, "expected an object");
  TaxonomyEntity entity;
  std::string type_name = RequireString(record, "type", line);
  auto type = ParseEntityType(type_name);
  if (!type) throw MalformedRecord(line, "unknown type '" + type_name + "'");
  entity.type = *type;
  entity.id = RequireString(record, "id", line);
  if (entity.id.empty()) throw MalformedRecord(line, "empty id");
  entity.canonical_name = RequireString(record, "name", line);
  if (entity.canonical_name.empty()) {
    throw MalformedRecord(line, "empty name");
  }
  entity.aliases.push_back(entity.canonical_name);
  if (auto it = record.find("aliases"); it != record.end()) {
    if (!it->is_array()) throw MalformedRecord(line, "aliases must be a list");
    for (const json &alias : *it) {
      if (!alias.is_string()) {
        throw MalformedRecord(line, "aliases must be strings");
      }
      entity.aliases.push_back(alias.get<std::string>());
    }
  }
  if (auto it = record.find("attributes"); it != record.end()) {
    if (!it->is_object()) {
      throw MalformedRecord(line, "attributes must be an object");
    }
    for (const auto &[name, value] : it->items()) {
      if (!value.is_string()) {
        throw MalformedRecord(line, "attribute '" + name + "' must be text");
      }
      entity.attributes[name] = value.get<std::string>();
    }
  }
  for (const auto &[name, value] : record.items()) {
    if (name != "type" && name != "id" && name != "name" &&
        name != "aliases" && name != "attributes") {
      spdlog::warn("taxonomy line {}: ignoring unknown field '{}'", line,
                   name);
    }
  }
  if (entity.type == EntityType::kTitle &&
      !entity.attributes.contains("industry")) {
    throw MalformedRecord(line, "title without 'industry' attribute");
  }
  if (entity.type == EntityType::kQuestion) {
    auto it = entity.attributes.find("template");
    if (it == entity.attributes.end()) {
      throw MalformedRecord(line, "question type without 'template' attribute");
    }
    if (CountPlaceholders(it->second) > 1) {
      throw MalformedRecord(line, "template has more than one placeholder");
    }
  }
  return entity;
}

}  // namespace

std::string TaxonomyEntity::attribute(std::string_view name) const {
  auto it = attributes.find(std::string(name));
  return it == attributes.end() ? std::string() : it->second;
}

std::vector<std::string> TaxonomyEntity::NormalizedAliases() const {
  std::vector<std::string> out;
  out.reserve(aliases.size());
  for (const std::string &alias : aliases) out.push_back(NormalizeKey(alias));
  return out;
}

Taxonomy::Taxonomy(std::vector<TaxonomyEntity> entities, int64_t version)
    : version_(version), entities_(std::move(entities)) {
  for (size_t i = 0; i < entities_.size(); ++i) {
    TaxonomyEntity &entity = entities_[i];
    // Canonical name first, then aliases deduplicated by normalized form.
    std::vector<std::string> raw;
    raw.push_back(entity.canonical_name);
    for (const std::string &alias : entity.aliases) raw.push_back(alias);
    std::set<std::string> seen;
    entity.aliases.clear();
    for (const std::string &alias : raw) {
      std::string key = NormalizeKey(alias);
      if (key.empty()) {
        throw Error(ErrorCode::kEmptyAlias,
                    "empty alias for " + Describe(entity.type, entity.id));
      }
      if (seen.insert(key).second) entity.aliases.push_back(alias);
    }
    size_t slot = Slot(entity.type);
    if (!by_id_[slot].emplace(entity.id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate id " + Describe(entity.type, entity.id));
    }
    ++counts_[slot];
  }
  for (EntityType type : kAllEntityTypes) {
    alias_indexes_[Slot(type)] = BuildAliasIndex(*this, type);
  }
}

const TaxonomyEntity *Taxonomy::Lookup(EntityType type,
                                       std::string_view id) const {
  const auto &table = by_id_[Slot(type)];
  auto it = table.find(std::string(id));
  return it == table.end() ? nullptr : &entities_[it->second];
}

std::vector<const TaxonomyEntity *> Taxonomy::OfType(EntityType type) const {
  std::vector<const TaxonomyEntity *> out;
  for (const TaxonomyEntity &entity : entities_) {
    if (entity.type == type) out.push_back(&entity);
  }
  return out;
}

bool operator==(const Taxonomy &a, const Taxonomy &b) {
  if (a.version_ != b.version_ || a.entities_.size() != b.entities_.size()) {
    return false;
  }
  using Flat = std::tuple<EntityType, std::string, std::string,
                          std::set<std::string>,
                          std::map<std::string, std::string>>;
  auto flatten = [](const Taxonomy &t) {
    std::vector<Flat> out;
    for (const TaxonomyEntity &e : t.entities_) {
      out.emplace_back(e.type, e.id, e.canonical_name,
                       std::set<std::string>(e.aliases.begin(),
                                             e.aliases.end()),
                       e.attributes);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return flatten(a) == flatten(b);
}

Taxonomy ParseTaxonomy(std::istream &in, int64_t version) {
  std::vector<TaxonomyEntity> entities;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded()) throw MalformedRecord(line_no, "invalid JSON");
    entities.push_back(ParseRecord(record, line_no));
  }
  return Taxonomy(std::move(entities), version);
}

Taxonomy LoadTaxonomy(const std::filesystem::path &path, int64_t version) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open taxonomy " + path.string());
  }
  return ParseTaxonomy(in, version);
}

void WriteTaxonomy(const Taxonomy &taxonomy, std::ostream &out) {
  for (const TaxonomyEntity &entity : taxonomy.entities()) {
    json record;
    record["type"] = EntityTypeName(entity.type);
    record["id"] = entity.id;
    record["name"] = entity.canonical_name;
    record["aliases"] = json::array();
    for (size_t i = 1; i < entity.aliases.size(); ++i) {
      record["aliases"].push_back(entity.aliases[i]);
    }
    record["attributes"] = entity.attributes;
    out << record.dump() << '\n';
  }
}

AliasIndex BuildAliasIndex(const Taxonomy &taxonomy, EntityType type) {
  AliasIndex index;
  for (const TaxonomyEntity &entity : taxonomy.entities()) {
    if (entity.type != type) continue;
    for (const std::string &alias : entity.NormalizedAliases()) {
      index[alias].push_back(entity.id);
    }
  }
  for (auto &[alias, ids] : index) {
    std::sort(ids.begin(), ids.end());
  }
  return index;
}

}  // namespace jobstd
