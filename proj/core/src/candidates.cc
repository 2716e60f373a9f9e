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

#include "jobstd/candidates.h"

namespace jobstd {

CandidateGenerator::CandidateGenerator(std::shared_ptr<const Taxonomy> taxonomy)
    : taxonomy_(std::move(taxonomy)), title_lookup_(*taxonomy_) {
  for (EntityType type : kAllEntityTypes) {
    if (taxonomy_->count(type) > 0) {
      matchers_.emplace(type, Matcher::Build(*taxonomy_, type));
    }
  }
}

const Matcher *CandidateGenerator::matcher(EntityType type) const {
  auto it = matchers_.find(type);
  return it == matchers_.end() ? nullptr : &it->second;
}

std::vector<Candidate> CandidateGenerator::Titles(
    const JobPosting &posting) const {
  std::vector<Candidate> out;
  std::map<std::string, std::vector<Occurrence>> full_matches;
  if (const Matcher *m = matcher(EntityType::kTitle)) {
    for (const EntityMention &mention :
         TagField(*m, posting.raw_title, Field::kTitle)) {
      full_matches[mention.entity_id].push_back(
          {Field::kTitle, mention.char_span});
    }
  }
  for (const std::string &id : title_lookup_.Candidates(posting.raw_title)) {
    Candidate c{{EntityType::kTitle, id}, posting.raw_title, {}};
    if (auto it = full_matches.find(id); it != full_matches.end()) {
      c.occurrences = it->second;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Candidate> CandidateGenerator::Mentioned(
    EntityType type, const JobPosting &posting) const {
  const Matcher *m = matcher(type);
  if (m == nullptr) return {};
  return GroupMentions(Tag(*m, posting));
}

}  // namespace jobstd
