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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "jobstd/error.h"
#include "jobstd/gbdt.h"
#include "jobstd/linear_model.h"
#include "jobstd/logistic.h"
#include "jobstd/metrics.h"
#include "jobstd/ranker.h"
#include "jobstd/rng.h"
#include "oracles.h"

namespace jobstd {
namespace {

// Label 1 iff feature 0 plus noise on feature 1 exceeds 0.5.
std::vector<TrainingExample> NoisyData(size_t n, uint64_t seed) {
  Rng rng(seed);
  std::vector<TrainingExample> data;
  for (size_t i = 0; i < n; ++i) {
    TrainingExample e;
    e.features[kNgramSim] = rng.UniformDouble();
    e.features[kEditSim] = rng.UniformDouble();
    e.features[kMentionCount] = static_cast<double>(rng.Uniform(5));
    e.label = e.features[kNgramSim] + 0.3 * (e.features[kEditSim] - 0.5) > 0.5;
    e.group = "g" + std::to_string(i / 10);
    e.entity_id = "e" + std::to_string(i);
    data.push_back(e);
  }
  return data;
}

template <typename Fn>
ErrorCode CodeOf(Fn fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::kIo;  // sentinel: nothing thrown
}

TEST(LogisticTest, SigmoidStaysOpenAndLossIsStable) {
  EXPECT_EQ(Sigmoid(0.0), 0.5);
  EXPECT_LT(Sigmoid(1000.0), 1.0);
  EXPECT_GT(Sigmoid(-1000.0), 0.0);
  EXPECT_NEAR(LogisticLoss(0.0, 1), std::log(2.0), 1e-15);
  EXPECT_NEAR(LogisticLoss(-800.0, 1), 800.0, 1e-9);
  EXPECT_NEAR(LogisticLoss(800.0, 0), 800.0, 1e-9);
  EXPECT_TRUE(std::isfinite(LogisticLoss(800.0, 1)));
}

TEST(LogisticTest, RequiresBothLabels) {
  std::vector<TrainingExample> data(3);
  EXPECT_EQ(CodeOf([&] { RequireBothLabels(data); }), ErrorCode::kDegenerateData);
  EXPECT_EQ(CodeOf([&] { RequireBothLabels({}); }), ErrorCode::kDegenerateData);
  data[1].label = 1;
  EXPECT_NO_THROW(RequireBothLabels(data));
}

TEST(LinearTest, GradientMatchesFiniteDifferences) {
  std::vector<TrainingExample> data = NoisyData(60, 1);
  data[3].weight = 2.5;
  LinearModel model;
  Rng rng(2);
  for (double &w : model.weights) w = rng.Real(-1, 1);
  model.bias = 0.3;
  LinearObjective objective = EvaluateLinearObjective(data, model, 0.01);
  auto numeric = testing::FiniteDifferenceGradient(data, model, 0.01, 1e-6);
  for (size_t i = 0; i <= kFeatureCount; ++i) {
    EXPECT_NEAR(objective.gradient[i], numeric[i], 1e-6) << i;
  }
}

TEST(LinearTest, TrainingLowersLossMonotonically) {
  std::vector<TrainingExample> data = NoisyData(200, 3);
  LinearTrainResult result = TrainLinear(data, {200, 1.0, 1e-4});
  ASSERT_EQ(result.loss_history.size(), 201u);
  EXPECT_NEAR(result.loss_history.front(), std::log(2.0), 1e-12);
  for (size_t i = 1; i < result.loss_history.size(); ++i) {
    EXPECT_LE(result.loss_history[i], result.loss_history[i - 1]);
  }
  EXPECT_LT(result.loss_history.back(), 0.5);
  EXPECT_GT(result.model.weights[kNgramSim], 0.0);
}

TEST(LinearTest, DegenerateDataAndSchemaMismatchThrow) {
  std::vector<TrainingExample> data(4);
  EXPECT_EQ(CodeOf([&] { TrainLinear(data); }), ErrorCode::kDegenerateData);
  LinearModel model;
  FeatureVector x;
  x.schema_version = 2;
  EXPECT_EQ(CodeOf([&] { ScoreLinear(model, x); }), ErrorCode::kSchemaMismatch);
}

TEST(GbdtTest, ZeroTreesPredictsThePrior) {
  std::vector<TrainingExample> data = NoisyData(100, 4);
  double positives = 0;
  for (const TrainingExample &e : data) positives += e.label;
  GbdtTrainResult result = TrainGbdt(data, {0, 3, 0.1, 5});
  EXPECT_TRUE(result.model.trees.empty());
  double p = positives / data.size();
  EXPECT_NEAR(result.model.base_score, std::log(p / (1 - p)), 1e-12);
  EXPECT_NEAR(ScoreGbdt(result.model, data[0].features), p, 1e-12);
  EXPECT_NEAR(result.loss_history.front(), testing::ConstantBaselineLoss(data),
              1e-12);
}

TEST(GbdtTest, LossIsNonIncreasingAndTreesRespectDepth) {
  std::vector<TrainingExample> data = NoisyData(300, 5);
  GbdtTrainResult result = TrainGbdt(data, {40, 2, 0.3, 5});
  ASSERT_EQ(result.loss_history.size(), 41u);
  for (size_t i = 1; i < result.loss_history.size(); ++i) {
    EXPECT_LE(result.loss_history[i], result.loss_history[i - 1] + 1e-12);
  }
  EXPECT_LT(result.loss_history.back(), 0.5 * result.loss_history.front());
  for (const RegressionTree &tree : result.model.trees) {
    EXPECT_LE(tree.Depth(), 2);
  }
  for (const TrainingExample &e : data) {
    EXPECT_DOUBLE_EQ(result.model.Margin(e.features),
                     testing::TreeWalkMargin(result.model, e.features));
  }
}

TEST(GbdtTest, TrainingIsDeterministic) {
  std::vector<TrainingExample> data = NoisyData(150, 6);
  EXPECT_EQ(TrainGbdt(data).model, TrainGbdt(data).model);
}

TEST(GbdtTest, TreeRoutesLeftBelowThreshold) {
  RegressionTree tree;
  tree.nodes = {{kNgramSim, 0.5, 1, 2, 0.0}, {-1, 0, -1, -1, -1.0},
                {-1, 0, -1, -1, 2.0}};
  FeatureVector x;
  x[kNgramSim] = 0.49;
  EXPECT_EQ(tree.Predict(x), -1.0);
  x[kNgramSim] = 0.5;
  EXPECT_EQ(tree.Predict(x), 2.0);
  EXPECT_EQ(tree.Depth(), 1);
}

TEST(RankerTest, OrdersByScoreThenIdAndTruncates) {
  LinearModel model;
  model.weights[kNgramSim] = 1.0;
  std::vector<ScoredCandidate> candidates;
  for (auto [id, v] : std::vector<std::pair<std::string, double>>{
           {"c", 0.2}, {"a", 0.9}, {"b", 0.2}, {"d", 0.5}}) {
    ScoredCandidate c;
    c.key = {EntityType::kSkill, id};
    c.features[kNgramSim] = v;
    candidates.push_back(c);
  }
  std::vector<RankedSuggestion> ranked = Rank(model, candidates, 3);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].entity_id, "a");
  EXPECT_EQ(ranked[1].entity_id, "d");
  EXPECT_EQ(ranked[2].entity_id, "b");
  EXPECT_EQ(ranked[2].rank, 3);
  EXPECT_DOUBLE_EQ(ranked[0].score, Sigmoid(0.9));
  EXPECT_EQ(Rank(model, candidates, 10).size(), 4u);
  EXPECT_TRUE(Rank(model, {}, 3).empty());
  EXPECT_EQ(CodeOf([&] { Rank(model, candidates, 0); }),
            ErrorCode::kInvalidArgument);
}

TEST(RankerTest, SaturatedScoresStillOrderByMargin) {
  LinearModel model;
  model.weights[kMentionCount] = 100.0;
  std::vector<ScoredCandidate> candidates(2);
  candidates[0].key = {EntityType::kSkill, "a"};
  candidates[0].features[kMentionCount] = 5;
  candidates[1].key = {EntityType::kSkill, "b"};
  candidates[1].features[kMentionCount] = 6;
  EXPECT_EQ(Rank(model, candidates, 2)[0].entity_id, "b");
}

TEST(RankerTest, EqualsSortThenTruncate) {
  std::vector<TrainingExample> data = NoisyData(200, 7);
  RankModel model = TrainGbdt(data, {20, 3, 0.1, 5}).model;
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ScoredCandidate> candidates;
    size_t n = rng.Uniform(15);
    for (size_t i = 0; i < n; ++i) {
      ScoredCandidate c;
      c.key = {EntityType::kTitle, "t" + std::to_string(rng.Uniform(100))};
      c.features = data[rng.Uniform(data.size())].features;
      candidates.push_back(c);
    }
    size_t k = 1 + rng.Uniform(6);
    std::vector<std::pair<EntityKey, double>> margins;
    for (const ScoredCandidate &c : candidates) {
      margins.emplace_back(c.key, Margin(model, c.features));
    }
    std::vector<RankedSuggestion> expected =
        testing::SortThenTruncate(std::move(margins), k);
    for (RankedSuggestion &s : expected) s.score = Sigmoid(s.score);
    EXPECT_EQ(Rank(model, candidates, k), expected);
  }
}

TEST(RankerTest, KindNames) {
  EXPECT_EQ(ModelKindName(RankModel{LinearModel{}}), "linear");
  EXPECT_EQ(ModelKindName(RankModel{GbdtModel{}}), "gbdt");
}

TEST(MetricsTest, AucCountsTiesAsHalf) {
  std::vector<double> scores = {0.9, 0.8, 0.8, 0.1};
  std::vector<int> labels = {1, 1, 0, 0};
  EXPECT_DOUBLE_EQ(Auc(scores, labels), (2 + 1.5) / 4.0);
  std::vector<int> one_class = {1, 1, 1, 1};
  EXPECT_EQ(Auc(scores, one_class), 0.5);
}

TEST(MetricsTest, LossAccuracyAndPrecision) {
  std::vector<TrainingExample> data(4);
  data[0].label = 1;
  data[1].label = 1;
  for (TrainingExample &e : data) e.group = "g";
  std::vector<double> p = {0.9, 0.4, 0.3, 0.6};
  EXPECT_DOUBLE_EQ(Accuracy(p, data), 0.5);
  double expected = -(std::log(0.9) + std::log(0.4) + std::log(0.7) +
                      std::log(0.4)) / 4;
  EXPECT_NEAR(LogLoss(p, data), expected, 1e-12);
  EXPECT_DOUBLE_EQ(PrecisionAtK(p, data, 1), 1.0);
  EXPECT_DOUBLE_EQ(PrecisionAtK(p, data, 2), 0.5);
}

TEST(MetricsTest, ReciprocalRank) {
  EXPECT_EQ(ReciprocalRank({false, false, true}), 1.0 / 3.0);
  EXPECT_EQ(ReciprocalRank({true}), 1.0);
  EXPECT_EQ(ReciprocalRank({false}), 0.0);
  EXPECT_EQ(ReciprocalRank({}), 0.0);
}

TEST(MetricsTest, EvaluateReportsCounts) {
  std::vector<TrainingExample> data = NoisyData(100, 9);
  RankModel model = TrainLinear(data).model;
  EvaluationReport report = Evaluate(model, data, 3);
  EXPECT_EQ(report.examples, 100u);
  EXPECT_EQ(report.k, 3u);
  EXPECT_GT(report.auc, 0.9);
  EXPECT_GT(report.accuracy, 0.8);
}

}  // namespace
}  // namespace jobstd
