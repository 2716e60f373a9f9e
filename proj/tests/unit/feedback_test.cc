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

#include "jobstd/feedback.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fixtures.h"
#include "jobstd/error.h"
#include "jobstd/wire.h"

namespace jobstd {
namespace {

FeedbackEvent Event(const std::string &suggestion, const std::string &entity,
                    FeedbackAction action) {
  FeedbackEvent e;
  e.suggestion_id = suggestion;
  e.posting_id = "p-" + suggestion;
  e.entity_type = EntityType::kSkill;
  e.entity_id = entity;
  e.action = action;
  e.industry = "software";
  e.feature_snapshot.assign(kFeatureCount, 0.25);
  e.timestamp_ms = 1000;
  e.event_id = MakeEventId(suggestion, e.entity_type, entity, action);
  return e;
}

ErrorCode ValidationCode(const FeedbackEvent &e) {
  try {
    ValidateEvent(e);
  } catch (const Error &error) {
    return error.code();
  }
  return ErrorCode::kIo;
}

TEST(FeedbackActionTest, NamesRoundTrip) {
  for (FeedbackAction a : {FeedbackAction::kShown, FeedbackAction::kAccepted,
                           FeedbackAction::kRejected, FeedbackAction::kOverridden}) {
    EXPECT_EQ(ParseFeedbackAction(FeedbackActionName(a)), a);
  }
  EXPECT_FALSE(ParseFeedbackAction("liked").has_value());
  EXPECT_EQ(MakeEventId("s1", EntityType::kTitle, "t_x", FeedbackAction::kAccepted),
            "s1:title:t_x:accepted");
}

TEST(ValidateEventTest, RejectsInconsistentEvents) {
  FeedbackEvent ok = Event("s", "java", FeedbackAction::kAccepted);
  EXPECT_NO_THROW(ValidateEvent(ok));

  FeedbackEvent e = ok;
  e.entity_id.clear();
  EXPECT_EQ(ValidationCode(e), ErrorCode::kInvalidEvent);
  e = ok;
  e.replacement_entity_id = "scala";
  EXPECT_EQ(ValidationCode(e), ErrorCode::kInvalidEvent);
  e = Event("s", "java", FeedbackAction::kOverridden);
  EXPECT_EQ(ValidationCode(e), ErrorCode::kInvalidEvent);
  e.replacement_entity_id = "java";
  EXPECT_EQ(ValidationCode(e), ErrorCode::kInvalidEvent);
  e.replacement_entity_id = "scala";
  EXPECT_NO_THROW(ValidateEvent(e));
  e = ok;
  e.feature_snapshot.pop_back();
  EXPECT_EQ(ValidationCode(e), ErrorCode::kInvalidEvent);
  e = ok;
  e.feature_snapshot[0] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(ValidationCode(e), ErrorCode::kInvalidEvent);
}

TEST(EventLogTest, DuplicatesAreRejectedAndSurviveReopen) {
  testing::TempDir dir;
  FeedbackEvent a = Event("s", "java", FeedbackAction::kAccepted);
  {
    EventLog log(dir / "events.jsonl");
    log.Append(a);
    EXPECT_TRUE(log.Contains(a.event_id));
    try {
      log.Append(a);
      FAIL();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kDuplicateEventId);
    }
  }
  EventLog reopened(dir / "events.jsonl");
  EXPECT_EQ(reopened.size(), 1u);
  EXPECT_THROW(reopened.Append(a), Error);
  std::vector<FeedbackEvent> events = ReadEvents(dir / "events.jsonl");
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0], a);
}

TEST(EventLogTest, BatchIsAllOrNothing) {
  testing::TempDir dir;
  EventLog log(dir / "events.jsonl");
  std::vector<FeedbackEvent> batch = {
      Event("s", "java", FeedbackAction::kShown),
      Event("s", "spark", FeedbackAction::kShown)};
  batch.push_back(batch[0]);
  EXPECT_THROW(log.AppendBatch(batch), Error);
  EXPECT_EQ(log.size(), 0u);
  batch.pop_back();
  log.AppendBatch(batch);
  EXPECT_EQ(log.size(), 2u);
  EXPECT_EQ(ReadEvents(log.path()).size(), 2u);
}

TEST(EventLogTest, CorruptLineIsReported) {
  testing::TempDir dir;
  testing::WriteFileBytes(
      dir / "events.jsonl",
      EventToLine(Event("s", "java", FeedbackAction::kShown)) + "\n{broken\n");
  try {
    EventLog log(dir / "events.jsonl");
    FAIL();
  } catch (const MalformedRecord &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_TRUE(ReadEvents(dir / "missing.jsonl").empty());
}

TEST(EventLineTest, EncodingIsCanonical) {
  FeedbackEvent e = Event("s", "java", FeedbackAction::kOverridden);
  e.replacement_entity_id = "scala";
  e.feature_snapshot[3] = 0.1 + 0.2;
  std::string line = EventToLine(e);
  EXPECT_EQ(EventFromJson(Json::parse(line)), e);
  EXPECT_EQ(EventToLine(EventFromJson(Json::parse(line))), line);
}

TEST(AggregateTest, CountsImpressionsAndAcceptances) {
  std::vector<FeedbackEvent> log = {
      Event("s1", "java", FeedbackAction::kShown),
      Event("s1", "java", FeedbackAction::kAccepted),
      Event("s1", "spark", FeedbackAction::kShown),
      Event("s1", "spark", FeedbackAction::kRejected)};
  MarketStats stats = Aggregate(log);
  EntityKey java{EntityType::kSkill, "java"};
  EntityKey spark{EntityType::kSkill, "spark"};
  EXPECT_EQ(stats.acceptance(java, "software"), (AcceptanceCounter{2, 1}));
  EXPECT_EQ(stats.acceptance(spark, "software"), (AcceptanceCounter{2, 0}));
  EXPECT_EQ(stats.pair_count("software", java), 1);
  EXPECT_EQ(stats.pair_count("software", spark), 0);
  EXPECT_EQ(stats.total(), 1);
}

TEST(ToTrainingExamplesTest, MapsActionsToLabels) {
  FeedbackEvent overridden = Event("s1", "java", FeedbackAction::kOverridden);
  overridden.replacement_entity_id = "scala";
  FeedbackEvent unseen = Event("s2", "java", FeedbackAction::kOverridden);
  unseen.replacement_entity_id = "cobol";
  std::vector<FeedbackEvent> log = {
      Event("s1", "java", FeedbackAction::kShown),
      Event("s1", "scala", FeedbackAction::kShown),
      Event("s1", "spark", FeedbackAction::kAccepted),
      Event("s1", "go", FeedbackAction::kRejected),
      overridden,
      unseen};
  std::vector<TrainingExample> examples = ToTrainingExamples(log, 3.0);
  ASSERT_EQ(examples.size(), 5u);
  EXPECT_EQ(examples[0].label, 1);
  EXPECT_EQ(examples[0].entity_id, "spark");
  EXPECT_EQ(examples[1].label, 0);
  EXPECT_EQ(examples[2].label, 0);
  EXPECT_EQ(examples[2].entity_id, "java");
  EXPECT_EQ(examples[3].label, 1);
  EXPECT_EQ(examples[3].entity_id, "scala");
  EXPECT_EQ(examples[4].label, 0);
  for (const TrainingExample &e : examples) {
    EXPECT_EQ(e.weight, 3.0);
    EXPECT_EQ(e.source, ExampleSource::kFeedback);
    EXPECT_EQ(e.features[0], 0.25);
  }
  EXPECT_EQ(examples[0].group, "p-s1");
}

TEST(ToTrainingExamplesTest, ForeignSchemaThrows) {
  FeedbackEvent e = Event("s", "java", FeedbackAction::kAccepted);
  e.schema_version = kFeatureSchemaVersion + 1;
  try {
    ToTrainingExamples({&e, 1});
    FAIL();
  } catch (const Error &error) {
    EXPECT_EQ(error.code(), ErrorCode::kSchemaMismatch);
  }
}

}  // namespace
}  // namespace jobstd
