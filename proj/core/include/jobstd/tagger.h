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

#ifndef JOBSTD_TAGGER_H_
#define JOBSTD_TAGGER_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jobstd/entity_type.h"
#include "jobstd/matcher.h"
#include "jobstd/taxonomy.h"
#include "jobstd/text.h"

namespace jobstd {

// A job posting as submitted by a job poster.
struct JobPosting {
  std::string posting_id;
  std::string raw_title;
  std::string description;
  std::string location;
  std::string company_field;
  std::string contact_email;
  std::string industry;

  // Throws Error(kInvalidArgument) unless posting_id and raw_title are
  // non-empty.
  void Validate() const;

  bool operator==(const JobPosting &) const = default;
};

// Posting fields scanned by the tagger, in output order.
enum class Field { kTitle = 0, kDescription = 1, kCompany = 2 };

std::string_view FieldName(Field field);
std::optional<Field> ParseField(std::string_view name);
const std::string &FieldText(const JobPosting &posting, Field field);

// One tagged alias occurrence in a posting field.
struct EntityMention {
  EntityType entity_type = EntityType::kSkill;
  std::string entity_id;
  std::string surface;  // original text covered by char_span
  Field field = Field::kDescription;
  size_t start_token = 0;
  size_t end_token = 0;  // exclusive
  CharSpan char_span;

  bool operator==(const EntityMention &) const = default;
};

// Reports every token-aligned alias occurrence in the title, description
// and company fields, overlaps included. Ordered by field, start token,
// entity id, then end token.
std::vector<EntityMention> Tag(const Matcher &matcher,
                               const JobPosting &posting);

// Same, for a single field.
std::vector<EntityMention> TagField(const Matcher &matcher,
                                    std::string_view text, Field field);

// Token -> title ids lookup table for title candidate retrieval: a title is
// a candidate when any of its aliases contains any token of the raw title.
class TitleLookup {
 public:
  explicit TitleLookup(const Taxonomy &taxonomy);

  // Sorted, deduplicated title ids.
  std::vector<std::string> Candidates(std::string_view raw_title) const;

  size_t key_count() const { return by_token_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> by_token_;
};

std::vector<std::string> TitleCandidates(std::string_view raw_title,
                                         const Taxonomy &taxonomy);

struct Sentence {
  std::string text;
  CharSpan span;  // into the description

  bool operator==(const Sentence &) const = default;
};

// Splits on '.', '!', '?' and newlines, trims whitespace and drops empty
// sentences.
std::vector<Sentence> SplitSentences(std::string_view text);

inline std::vector<Sentence> QuestionSentenceCandidates(
    const JobPosting &posting) {
  return SplitSentences(posting.description);
}

}  // namespace jobstd

#endif  // JOBSTD_TAGGER_H_
