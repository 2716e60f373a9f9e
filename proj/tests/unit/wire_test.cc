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

#include "jobstd/wire.h"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.h"
#include "jobstd/error.h"
#include "jobstd/gbdt.h"
#include "jobstd/linear_model.h"
#include "service_fixture.h"

namespace jobstd {
namespace {

template <typename Fn>
ErrorCode CodeOf(Fn fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(WireTest, PostingRoundTripAndDefaults) {
  JobPosting p{"id", "Title", "Desc", "Berlin", "Acme", "a@b.c", "software"};
  EXPECT_EQ(PostingFromJson(ToJson(p)), p);
  JobPosting minimal = PostingFromJson(Json{{"posting_id", "x"}, {"raw_title", "T"}});
  EXPECT_EQ(minimal.description, "");
  EXPECT_EQ(CodeOf([] { PostingFromJson(Json{{"posting_id", "x"}}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { PostingFromJson(Json{{"posting_id", 3}, {"raw_title", "T"}}); }),
            ErrorCode::kInvalidArgument);
}

TEST(WireTest, ReadPostingsReportsLineNumbers) {
  std::istringstream in(
      "{\"posting_id\": \"a\", \"raw_title\": \"T\"}\n\n{\"posting_id\": \"b\"}\n");
  try {
    ReadPostings(in);
    FAIL();
  } catch (const MalformedRecord &e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(WireTest, FeaturesAndExamplesRoundTrip) {
  TrainingExample e;
  for (size_t i = 0; i < kFeatureCount; ++i) e.features[i] = 0.1 * i - 0.3;
  e.label = 1;
  e.weight = 2.0;
  e.source = ExampleSource::kFeedback;
  e.group = "post-1";
  e.entity_type = EntityType::kCompany;
  e.entity_id = "c_acme";
  EXPECT_EQ(ExampleFromJson(ToJson(e)), e);

  std::ostringstream out;
  std::vector<TrainingExample> examples = {e, TrainingExample{}};
  WriteExamples(examples, out);
  std::istringstream in(out.str());
  EXPECT_EQ(ReadExamples(in), examples);

  // Flags are diagnostics and are not persisted with examples.
  TrainingExample flagged = e;
  flagged.features.flags = kFlagPmiUndefined;
  EXPECT_EQ(ExampleFromJson(ToJson(flagged)), e);

  Json foreign = FeaturesToJson(e.features);
  EXPECT_EQ(CodeOf([&] { FeaturesFromJson(foreign, kFeatureSchemaVersion + 1); }),
            ErrorCode::kSchemaMismatch);
  EXPECT_EQ(FeatureMap(e.features)["features"]["edit_sim"], e.features[kEditSim]);
}

TEST(WireTest, StatsRoundTrip) {
  MarketStats stats;
  stats.AddCooccurrence("software", {EntityType::kSkill, "java"}, 4);
  stats.AddCooccurrence("finance", {EntityType::kTitle, "t_analyst"}, 1);
  stats.AddAcceptance({EntityType::kSkill, "java"}, "software", {7, 3});
  EXPECT_EQ(StatsFromJson(ToJson(stats)), stats);
  EXPECT_EQ(StatsFromJson(ToJson(MarketStats{})), MarketStats{});
}

TEST(WireTest, SentencesRequireALabel) {
  LabeledSentence s{"Must relocate.", "q_relocation"};
  EXPECT_EQ(SentenceFromJson(ToJson(s)), s);
  EXPECT_EQ(CodeOf([] { SentenceFromJson(Json{{"text", "x"}, {"label", ""}}); }),
            ErrorCode::kInvalidArgument);
}

TEST(ModelFileTest, EveryKindRoundTripsThroughDisk) {
  testing::TempDir dir;
  LinearModel linear = testing::ConstantModel(0.25);
  linear.weights[kPmiIndustry] = -1.5;
  GbdtModel gbdt;
  gbdt.base_score = -0.4;
  gbdt.trees.push_back({{{kEditSim, 0.5, 1, 2, 0}, {-1, 0, -1, -1, -0.75},
                         {-1, 0, -1, -1, 1.0 / 3.0}}});
  std::vector<ModelArtifact> artifacts = {
      {linear, 3, EntityType::kSkill},
      {gbdt, 1, EntityType::kTitle},
      {testing::SampleQuestionModel(), 2, std::nullopt}};
  for (const ModelArtifact &a : artifacts) {
    std::filesystem::path path = dir / (std::string(ModelKind(a.model)) + "/v.json");
    SaveModel(a, path);
    EXPECT_EQ(LoadModel(path), a) << ModelKind(a.model);
    EXPECT_EQ(ReadJsonFile(path)["format"], kModelFormat);
  }
  EXPECT_EQ(ModelKindName(ToRankModel(artifacts[1])), "gbdt");
  EXPECT_EQ(CodeOf([&] { ToRankModel(artifacts[2]); }), ErrorCode::kInvalidArgument);
}

TEST(ModelFileTest, RejectsForeignFiles) {
  EXPECT_EQ(CodeOf([] { ModelFromJson(Json{{"format", "other"}}); }),
            ErrorCode::kInvalidArgument);
  Json json = ToJson(ModelArtifact{testing::ConstantModel(0), 1, EntityType::kSkill});
  json["kind"] = "forest";
  EXPECT_THROW(ModelFromJson(json), Error);
  EXPECT_EQ(CodeOf([] { LoadModel("/nonexistent/v1.json"); }), ErrorCode::kIo);
}

}  // namespace
}  // namespace jobstd
