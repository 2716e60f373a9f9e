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

#include "jobstd/tagger.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "jobstd/error.h"

namespace jobstd {

void JobPosting::Validate() const {
  if (posting_id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "posting_id must be non-empty");
  }
  if (raw_title.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "raw_title must be non-empty");
  }
}

std::string_view FieldName(Field field) {
  switch (field) {
    case Field::kTitle:
      return "title";
    case Field::kDescription:
      return "description";
    case Field::kCompany:
      return "company";
  }
  return "unknown";
}

std::optional<Field> ParseField(std::string_view name) {
  for (Field field : {Field::kTitle, Field::kDescription, Field::kCompany}) {
    if (FieldName(field) == name) return field;
  }
  return std::nullopt;
}

const std::string &FieldText(const JobPosting &posting, Field field) {
  switch (field) {
    case Field::kTitle:
      return posting.raw_title;
    case Field::kDescription:
      return posting.description;
    case Field::kCompany:
      return posting.company_field;
  }
  return posting.description;
}

std::vector<EntityMention> TagField(const Matcher &matcher,
                                    std::string_view text, Field field) {
  std::vector<EntityMention> mentions;
  NormalizedText normalized = Normalize(text);
  for (const Matcher::Match &match : matcher.FindAll(normalized.tokens)) {
    CharSpan span{normalized.spans[match.start_token].begin,
                  normalized.spans[match.end_token - 1].end};
    std::string surface(text.substr(span.begin, span.size()));
    for (const std::string &id : matcher.entity_ids(match.pattern)) {
      mentions.push_back({matcher.entity_type(), id, surface, field,
                          match.start_token, match.end_token, span});
    }
  }
  std::sort(mentions.begin(), mentions.end(),
            [](const EntityMention &a, const EntityMention &b) {
              return std::tie(a.start_token, a.entity_id, a.end_token) <
                     std::tie(b.start_token, b.entity_id, b.end_token);
            });
  return mentions;
}

std::vector<EntityMention> Tag(const Matcher &matcher,
                               const JobPosting &posting) {
  std::vector<EntityMention> mentions;
  for (Field field : {Field::kTitle, Field::kDescription, Field::kCompany}) {
    auto part = TagField(matcher, FieldText(posting, field), field);
    mentions.insert(mentions.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
  }
  return mentions;
}

TitleLookup::TitleLookup(const Taxonomy &taxonomy) {
  for (const TaxonomyEntity *entity : taxonomy.OfType(EntityType::kTitle)) {
    for (const std::string &alias : entity->aliases) {
      for (const std::string &token : Normalize(alias).tokens) {
        by_token_[token].push_back(entity->id);
      }
    }
  }
  for (auto &[token, ids] : by_token_) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
}

std::vector<std::string> TitleLookup::Candidates(
    std::string_view raw_title) const {
  std::set<std::string> ids;
  for (const std::string &token : Normalize(raw_title).tokens) {
    auto it = by_token_.find(token);
    if (it != by_token_.end()) ids.insert(it->second.begin(), it->second.end());
  }
  return {ids.begin(), ids.end()};
}

std::vector<std::string> TitleCandidates(std::string_view raw_title,
                                         const Taxonomy &taxonomy) {
  return TitleLookup(taxonomy).Candidates(raw_title);
}

std::vector<Sentence> SplitSentences(std::string_view text) {
  auto is_terminator = [](char c) {
    return c == '.' || c == '!' || c == '?' || c == '\n';
  };
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  };
  std::vector<Sentence> sentences;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && !is_terminator(text[i])) continue;
    size_t begin = start;
    size_t end = i;
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (end > begin) {
      sentences.push_back(
          {std::string(text.substr(begin, end - begin)), {begin, end}});
    }
    start = i + 1;
  }
  return sentences;
}

}  // namespace jobstd
