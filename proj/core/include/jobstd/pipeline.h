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

#ifndef JOBSTD_PIPELINE_H_
#define JOBSTD_PIPELINE_H_

#include <span>
#include <vector>

#include "jobstd/candidates.h"
#include "jobstd/features.h"
#include "jobstd/question.h"
#include "jobstd/ranker.h"
#include "jobstd/tagger.h"

// Tag -> extract -> rank for one entity type of one posting.
namespace jobstd {

// Candidates of `type`: token-lookup titles, mentioned skills or companies,
// or classified question sentences (none without a classifier).
std::vector<Candidate> CandidatesFor(EntityType type, const JobPosting &posting,
                                     const CandidateGenerator &generator,
                                     const QuestionClassifier *classifier);

// Features of every candidate, with all of them as coherence peers.
std::vector<ScoredCandidate> ExtractAll(const PostingContext &context,
                                        std::span<const Candidate> candidates,
                                        const FeatureExtractor &extractor);

struct RankedSection {
  std::vector<RankedSuggestion> suggestions;  // top k
  std::vector<ScoredCandidate> candidates;    // every candidate, input order
};

RankedSection RankSection(EntityType type, const PostingContext &context,
                          const CandidateGenerator &generator,
                          const FeatureExtractor &extractor,
                          const RankModel &model, size_t k,
                          const QuestionClassifier *classifier = nullptr);

}  // namespace jobstd

#endif  // JOBSTD_PIPELINE_H_
