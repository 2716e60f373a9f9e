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

#include "jobstd/pipeline.h"

namespace jobstd {

std::vector<Candidate> CandidatesFor(EntityType type, const JobPosting &posting,
                                     const CandidateGenerator &generator,
                                     const QuestionClassifier *classifier) {
  switch (type) {
    case EntityType::kTitle:
      return generator.Titles(posting);
    case EntityType::kSkill:
    case EntityType::kCompany:
      return generator.Mentioned(type, posting);
    case EntityType::kQuestion: {
      if (classifier == nullptr) return {};
      std::vector<Candidate> out = QuestionCandidates(posting, *classifier);
      std::erase_if(out, [&](const Candidate &c) {
        return generator.taxonomy().Lookup(c.key) == nullptr;
      });
      return out;
    }
  }
  return {};
}

std::vector<ScoredCandidate> ExtractAll(const PostingContext &context,
                                        std::span<const Candidate> candidates,
                                        const FeatureExtractor &extractor) {
  std::vector<ScoredCandidate> out;
  out.reserve(candidates.size());
  for (const Candidate &c : candidates) {
    out.push_back({c.key, extractor.Extract(context, c, candidates)});
  }
  return out;
}

RankedSection RankSection(EntityType type, const PostingContext &context,
                          const CandidateGenerator &generator,
                          const FeatureExtractor &extractor,
                          const RankModel &model, size_t k,
                          const QuestionClassifier *classifier) {
  RankedSection section;
  std::vector<Candidate> candidates =
      CandidatesFor(type, context.posting(), generator, classifier);
  section.candidates = ExtractAll(context, candidates, extractor);
  section.suggestions = Rank(model, section.candidates, k);
  return section;
}

}  // namespace jobstd
