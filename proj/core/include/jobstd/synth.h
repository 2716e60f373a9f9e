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

#ifndef JOBSTD_SYNTH_H_
#define JOBSTD_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "jobstd/candidates.h"
#include "jobstd/embedding.h"
#include "jobstd/feedback.h"
#include "jobstd/question.h"
#include "jobstd/ranker.h"
#include "jobstd/rng.h"
#include "jobstd/taxonomy.h"
#include "jobstd/wire.h"

// Deterministic synthetic postings, labels and user behaviour for desk-scale
// training and closed-loop experiments.
namespace jobstd {

// Sentence templates. Placeholders: {title}, {company}, {location},
// {skill}, {skill2}.
struct Templates {
  std::vector<std::string> title_prefixes;
  std::vector<std::string> title_suffixes;
  std::vector<std::string> locations;
  std::vector<std::string> intro;
  std::vector<std::string> skill_requirement;
  std::vector<std::string> skill_distractor;
  std::vector<std::string> company_distractor;
  std::vector<std::string> filler;
  std::string about_us;
  // Question type id -> sentences that ask for it / merely mention it.
  std::map<std::string, std::vector<std::string>> question_requirement;
  std::map<std::string, std::vector<std::string>> question_mention;
};

Templates TemplatesFromJson(const Json &json);
Templates LoadTemplates(const std::filesystem::path &path);

// What the generator embedded in a posting.
struct PostingTruth {
  std::string title;
  std::vector<std::string> skills;             // required, in-domain
  std::vector<std::string> distractor_skills;  // in the "about us" section
  std::string company;
  std::string distractor_company;              // may be empty
  std::vector<std::string> questions;          // required question types
  std::vector<std::string> distractor_questions;  // only mentioned
  // Sentence spans (into the description) of each question type's
  // requirement or mention sentence.
  std::map<std::string, CharSpan> question_spans;
};

struct GeneratedPosting {
  JobPosting posting;
  PostingTruth truth;
};

class PostingGenerator {
 public:
  PostingGenerator(std::shared_ptr<const Taxonomy> taxonomy,
                   const Templates &templates, uint64_t seed);

  // Ids are "<prefix><n>" with n counting from 1.
  GeneratedPosting Next(const std::string &id_prefix = "post-");

 private:
  std::shared_ptr<const Taxonomy> taxonomy_;
  const Templates *templates_;
  Rng rng_;
  uint64_t count_ = 0;
  std::vector<const TaxonomyEntity *> titles_;
  std::vector<const TaxonomyEntity *> companies_;
  std::map<std::string, std::vector<const TaxonomyEntity *>> skills_by_domain_;
  std::vector<const TaxonomyEntity *> skills_;
  std::vector<std::string> question_ids_;
};

// Template sentences labeled with the question type they ask for, or
// kNoneClass for every other kind of sentence (including sentences that
// merely mention a question topic).
std::vector<LabeledSentence> GenerateLabeledSentences(
    const Taxonomy &taxonomy, const Templates &templates, size_t n,
    uint64_t seed);

struct SeedData {
  std::vector<GeneratedPosting> postings;
  // Candidates of every type with generator labels: embedded entities are
  // positive, every other candidate (distractors included) negative.
  std::vector<TrainingExample> examples;
  std::vector<LabeledSentence> sentences;
};

// Labeled examples for one generated posting, using `stats` for the market
// features.
std::vector<TrainingExample> LabelPosting(const GeneratedPosting &generated,
                                          const CandidateGenerator &generator,
                                          const FeatureExtractor &extractor);

SeedData GenerateSeedData(std::shared_ptr<const Taxonomy> taxonomy,
                          std::shared_ptr<const EmbeddingTable> embeddings,
                          const Templates &templates, size_t n_postings,
                          uint64_t seed);

// A simulated user who accepts exactly the listed entities of one type and
// rejects every other suggestion of that type.
struct Persona {
  std::string name;
  EntityType entity_type = EntityType::kSkill;
  std::set<std::string> accept;

  bool Accepts(const std::string &id) const { return accept.contains(id); }
};

Persona PersonaFromJson(const Json &json);
Persona LoadPersona(const std::filesystem::path &path);

struct SimulationOptions {
  int rounds = 500;
  size_t k = 10;
  uint64_t seed = 7;
  int64_t start_timestamp_ms = 1'600'000'000'000;
};

// Closed-loop harness. Each round generates a posting, serves the top k
// candidates of the persona's type with `model` and the statistics
// aggregated from the events so far, logs a Shown event per suggestion and
// the persona's accept/reject decision on it.
std::vector<FeedbackEvent> SimulateFeedback(
    std::shared_ptr<const Taxonomy> taxonomy,
    std::shared_ptr<const EmbeddingTable> embeddings,
    const Templates &templates, const RankModel &model, const Persona &persona,
    const SimulationOptions &options);

// Mean over postings with at least one candidate the persona accepts of the
// reciprocal rank of the best-ranked such candidate.
double PersonaMrr(std::span<const GeneratedPosting> postings,
                  const CandidateGenerator &generator,
                  const FeatureExtractor &extractor, const RankModel &model,
                  const Persona &persona);

}  // namespace jobstd

#endif  // JOBSTD_SYNTH_H_
