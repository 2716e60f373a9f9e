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

// Microbenchmarks of the hot paths: tagging, feature extraction, ranking
// and full standardization of one posting.

#include <benchmark/benchmark.h>
#include <unistd.h>

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "jobstd/candidates.h"
#include "jobstd/features.h"
#include "jobstd/gbdt.h"
#include "jobstd/model_store.h"
#include "jobstd/question.h"
#include "jobstd/service/registry.h"
#include "jobstd/service/standardizer.h"
#include "jobstd/synth.h"
#include "jobstd/tagger.h"
#include "jobstd/wire.h"

namespace jobstd {
namespace {

const std::filesystem::path kDataDir = JOBSTD_BENCH_DATA_DIR;

struct Corpus {
  std::shared_ptr<const Taxonomy> taxonomy;
  std::shared_ptr<const EmbeddingTable> embeddings;
  Templates templates;
  std::vector<JobPosting> postings;
  SeedData seed;
};

const Corpus &GetCorpus() {
  static const Corpus *corpus = [] {
    auto *c = new Corpus;
    c->taxonomy = std::make_shared<const Taxonomy>(
        LoadTaxonomy(kDataDir / "taxonomy.jsonl"));
    c->embeddings = std::make_shared<const EmbeddingTable>(
        LoadEmbeddings(kDataDir / "embeddings.txt"));
    c->templates = LoadTemplates(kDataDir / "templates.json");
    PostingGenerator generator(c->taxonomy, c->templates, 99);
    for (int i = 0; i < 256; ++i) c->postings.push_back(generator.Next().posting);
    c->seed = GenerateSeedData(c->taxonomy, c->embeddings, c->templates, 200, 1);
    return c;
  }();
  return *corpus;
}

std::vector<TrainingExample> ExamplesOf(EntityType type) {
  std::vector<TrainingExample> out;
  for (const TrainingExample &e : GetCorpus().seed.examples) {
    if (e.entity_type == type) out.push_back(e);
  }
  return out;
}

void BM_TagSkills(benchmark::State &state) {
  const Corpus &c = GetCorpus();
  Matcher matcher = Matcher::Build(*c.taxonomy, EntityType::kSkill);
  size_t i = 0;
  int64_t bytes = 0;
  for (auto _ : state) {
    const JobPosting &p = c.postings[i++ % c.postings.size()];
    benchmark::DoNotOptimize(Tag(matcher, p));
    bytes += static_cast<int64_t>(p.raw_title.size() + p.description.size());
  }
  state.SetBytesProcessed(bytes);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TagSkills);

void BM_TitleCandidates(benchmark::State &state) {
  const Corpus &c = GetCorpus();
  CandidateGenerator generator(c.taxonomy);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generator.Titles(c.postings[i++ % c.postings.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TitleCandidates);

void BM_ExtractSkillFeatures(benchmark::State &state) {
  const Corpus &c = GetCorpus();
  CandidateGenerator generator(c.taxonomy);
  SentenceEncoder encoder(c.embeddings);
  MarketStats stats;
  FeatureExtractor extractor(*c.taxonomy, encoder, stats);
  size_t i = 0;
  int64_t candidates = 0;
  for (auto _ : state) {
    const JobPosting &p = c.postings[i++ % c.postings.size()];
    PostingContext context(p, encoder);
    std::vector<Candidate> skills = generator.Mentioned(EntityType::kSkill, p);
    for (const Candidate &candidate : skills) {
      benchmark::DoNotOptimize(extractor.Extract(context, candidate, skills));
    }
    candidates += static_cast<int64_t>(skills.size());
  }
  state.SetItemsProcessed(candidates);
}
BENCHMARK(BM_ExtractSkillFeatures);

void BM_GbdtScore(benchmark::State &state) {
  std::vector<TrainingExample> data = ExamplesOf(EntityType::kSkill);
  GbdtTrainOptions options;
  options.num_trees = static_cast<int>(state.range(0));
  GbdtModel model = TrainGbdt(data, options).model;
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreGbdt(model, data[i++ % data.size()].features));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GbdtScore)->Arg(10)->Arg(100);

void BM_GbdtTrain(benchmark::State &state) {
  std::vector<TrainingExample> data = ExamplesOf(EntityType::kSkill);
  GbdtTrainOptions options;
  options.num_trees = 20;
  for (auto _ : state) benchmark::DoNotOptimize(TrainGbdt(data, options));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_GbdtTrain)->Unit(benchmark::kMillisecond);

// Trains small models of every kind into a scratch models directory and
// loads them as a serving state.
class StandardizeFixture : public benchmark::Fixture {
 public:
  void SetUp(const benchmark::State &) override {
    if (serving_) return;
    const Corpus &c = GetCorpus();
    dir_ = std::filesystem::temp_directory_path() /
           ("jobstd-bench-" + std::to_string(::getpid()));
    for (EntityType type : kAllEntityTypes) {
      GbdtTrainOptions options;
      options.num_trees = 50;
      SaveModel({TrainGbdt(ExamplesOf(type), options).model, 1, type},
                VersionPath(RankerDir(dir_, type), 1));
    }
    std::vector<std::string> classes;
    for (const TaxonomyEntity *e : c.taxonomy->OfType(EntityType::kQuestion)) {
      classes.push_back(e->id);
    }
    QuestionTrainOptions options;
    options.epochs = 200;
    SaveModel({TrainQuestionModel(c.seed.sentences, classes, *c.embeddings,
                                  options)
                   .model,
               1, std::nullopt},
              VersionPath(ClassifierDir(dir_), 1));
    config_.taxonomy = kDataDir / "taxonomy.jsonl";
    config_.embeddings = kDataDir / "embeddings.txt";
    config_.models_dir = dir_;
    serving_ = LoadServingState(config_);
  }

  ~StandardizeFixture() override {
    if (!dir_.empty()) std::filesystem::remove_all(dir_);
  }

 protected:
  std::filesystem::path dir_;
  ServiceConfig config_;
  std::shared_ptr<const ServingState> serving_;
};

BENCHMARK_DEFINE_F(StandardizeFixture, AllSections)(benchmark::State &state) {
  const Corpus &c = GetCorpus();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Standardize(*serving_, config_, c.postings[i++ % c.postings.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_REGISTER_F(StandardizeFixture, AllSections)
    ->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace jobstd

BENCHMARK_MAIN();
