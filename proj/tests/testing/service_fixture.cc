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

#include "service_fixture.h"

#include "fixtures.h"
#include "jobstd/model_store.h"
#include "jobstd/synth.h"
#include "jobstd/wire.h"

namespace jobstd::testing {

LinearModel ConstantModel(double bias) {
  LinearModel model;
  model.bias = bias;
  return model;
}

void WriteConstantRankers(const std::filesystem::path &models_dir,
                          int64_t version, double bias) {
  for (EntityType type : kAllEntityTypes) {
    ModelArtifact artifact{ConstantModel(bias), version, type};
    SaveModel(artifact, VersionPath(RankerDir(models_dir, type), version));
  }
}

const QuestionModel &SampleQuestionModel() {
  static const QuestionModel *model = [] {
    const SampleData &s = Sample();
    std::vector<LabeledSentence> sentences =
        GenerateLabeledSentences(*s.taxonomy, s.templates, 400, 11);
    std::vector<std::string> classes;
    for (const TaxonomyEntity *e : s.taxonomy->OfType(EntityType::kQuestion)) {
      classes.push_back(e->id);
    }
    return new QuestionModel(
        TrainQuestionModel(sentences, classes, *s.embeddings).model);
  }();
  return *model;
}

void WriteClassifier(const std::filesystem::path &models_dir, int64_t version) {
  ModelArtifact artifact{SampleQuestionModel(), version, std::nullopt};
  SaveModel(artifact, VersionPath(ClassifierDir(models_dir), version));
}

ServiceConfig MakeServiceConfig(const std::filesystem::path &models_dir) {
  ServiceConfig config;
  config.taxonomy = TaxonomyPath();
  config.embeddings = EmbeddingsPath();
  config.models_dir = models_dir;
  config.event_log = models_dir / "events.jsonl";
  config.snapshot_store = models_dir / "suggestions.jsonl";
  return config;
}

}  // namespace jobstd::testing
