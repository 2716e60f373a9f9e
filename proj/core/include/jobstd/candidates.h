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

#ifndef JOBSTD_CANDIDATES_H_
#define JOBSTD_CANDIDATES_H_

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "jobstd/features.h"
#include "jobstd/matcher.h"
#include "jobstd/tagger.h"
#include "jobstd/taxonomy.h"

namespace jobstd {

// Phase-1 candidate generation for every entity type, built once per
// taxonomy and shared read-only.
class CandidateGenerator {
 public:
  explicit CandidateGenerator(std::shared_ptr<const Taxonomy> taxonomy);

  // Titles retrieved through the token lookup table. Each candidate's
  // surface is the raw title; occurrences are full alias matches in it.
  std::vector<Candidate> Titles(const JobPosting &posting) const;

  // Skills or companies mentioned anywhere in the posting.
  std::vector<Candidate> Mentioned(EntityType type,
                                   const JobPosting &posting) const;

  // nullptr when the taxonomy has no entity of the type.
  const Matcher *matcher(EntityType type) const;
  const TitleLookup &title_lookup() const { return title_lookup_; }
  const Taxonomy &taxonomy() const { return *taxonomy_; }
  const std::shared_ptr<const Taxonomy> &shared_taxonomy() const {
    return taxonomy_;
  }

 private:
  std::shared_ptr<const Taxonomy> taxonomy_;
  std::map<EntityType, Matcher> matchers_;
  TitleLookup title_lookup_;
};

}  // namespace jobstd

#endif  // JOBSTD_CANDIDATES_H_
