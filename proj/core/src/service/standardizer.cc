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

#include "jobstd/service/standardizer.h"

#include <algorithm>

#include "jobstd/error.h"

namespace jobstd {

std::vector<EntityType> MissingModels(const ServingState &state,
                                      std::span<const EntityType> types) {
  std::vector<EntityType> missing;
  for (EntityType type : types) {
    if (state.ranker(type) == nullptr ||
        (type == EntityType::kQuestion && state.classifier == nullptr)) {
      missing.push_back(type);
    }
  }
  return missing;
}

StandardizeResult Standardize(const ServingState &state,
                              const ServiceConfig &config,
                              const JobPosting &posting,
                              std::span<const EntityType> types) {
  if (std::vector<EntityType> missing = MissingModels(state, types);
      !missing.empty()) {
    throw Error(ErrorCode::kNotFound,
                "no active model for " +
                    std::string(EntityTypeName(missing.front())));
  }
  StandardizeResult result;
  result.taxonomy_version = state.taxonomy->version();
  FeatureExtractor extractor(*state.taxonomy, *state.encoder, *state.stats);
  PostingContext context(posting, *state.encoder);
  for (EntityType type : types) {
    const ActiveRanker &ranker = *state.ranker(type);
    result.sections[type] =
        RankSection(type, context, *state.generator, extractor, *ranker.model,
                    config.KFor(type), state.classifier.get());
    result.model_versions[type] = ranker.version;
  }
  return result;
}

namespace {

Json SuggestionJson(const RankedSuggestion &s, const Taxonomy &taxonomy) {
  Json json = ToJson(s);
  const TaxonomyEntity *entity = taxonomy.Lookup(s.entity_type, s.entity_id);
  json["name"] = entity != nullptr ? entity->canonical_name : s.entity_id;
  if (s.entity_type == EntityType::kQuestion && entity != nullptr) {
    json["question"] = entity->attribute("template");
  }
  return json;
}

Json SectionJson(const StandardizeResult &result, EntityType type,
                 const Taxonomy &taxonomy) {
  Json list = Json::array();
  auto it = result.sections.find(type);
  if (it == result.sections.end()) return list;
  for (const RankedSuggestion &s : it->second.suggestions) {
    list.push_back(SuggestionJson(s, taxonomy));
  }
  return list;
}

}  // namespace

Json SectionsJson(const StandardizeResult &result, const Taxonomy &taxonomy) {
  Json companies = SectionJson(result, EntityType::kCompany, taxonomy);
  return {{"titles", SectionJson(result, EntityType::kTitle, taxonomy)},
          {"skills", SectionJson(result, EntityType::kSkill, taxonomy)},
          {"company", companies.empty() ? Json(nullptr) : companies.front()},
          {"questions", SectionJson(result, EntityType::kQuestion, taxonomy)}};
}

}  // namespace jobstd
