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

#include "cli.h"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "jobstd/feedback.h"
#include "jobstd/wire.h"

namespace jobstd {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun RunJobstd(std::vector<std::string> args) {
  args.insert(args.begin(), "jobstd");
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string DataArg() { return "--data-dir=" + testing::DataDir().string(); }

TEST(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(RunJobstd({"--help"}).code, kExitOk);
  EXPECT_EQ(RunJobstd({}).code, kExitUsage);
  EXPECT_EQ(RunJobstd({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunJobstd({"evaluate", "--bogus-flag"}).code, kExitUsage);
  CliRun missing = RunJobstd({"taxonomy", "validate", "/no/such/file.jsonl"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("jobstd:"), std::string::npos);
}

TEST(CliTest, TaxonomyValidate) {
  CliRun ok = RunJobstd({"taxonomy", "validate", testing::TaxonomyPath().string()});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.out.rfind("ok: ", 0), 0u);

  testing::TempDir dir;
  testing::WriteFileBytes(dir / "bad.jsonl",
                          R"({"type": "skill", "id": "a", "name": "A"})"
                          "\n"
                          R"({"type": "skill", "id": "a", "name": "B"})"
                          "\n");
  CliRun bad = RunJobstd({"taxonomy", "validate", (dir / "bad.jsonl").string()});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_NE(bad.err.find("E_DUPLICATE_ID"), std::string::npos) << bad.err;
}

TEST(CliTest, TagWritesMentionLines) {
  testing::TempDir dir;
  JobPosting p{"p1", "Data Engineer", "Python and Spark required.", "", "", "", ""};
  testing::WriteFileBytes(dir / "in.jsonl", ToJson(p).dump() + "\n");
  CliRun run = RunJobstd({"tag", "--taxonomy", testing::TaxonomyPath().string(),
                    "--input", (dir / "in.jsonl").string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  std::istringstream lines(run.out);
  std::string line;
  size_t count = 0;
  while (std::getline(lines, line)) {
    Json json = Json::parse(line);
    for (const char *key : {"posting_id", "entity_id", "entity_type", "field",
                            "surface"}) {
      EXPECT_TRUE(json.contains(key)) << key << " in " << line;
    }
    EXPECT_EQ(json["entity_type"], "skill");
    ++count;
  }
  EXPECT_GE(count, 2u);
}

TEST(CliTest, GenerateTrainEvaluate) {
  testing::TempDir dir;
  CliRun gen = RunJobstd({"generate", DataArg(), "--n", "20", "--seed", "3",
                    "--out-dir", dir.path().string()});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  CliRun train = RunJobstd({"train", "--kind", "linear", "--data",
                      (dir / "examples.jsonl").string(), "--out",
                      (dir / "m.json").string(), "--epochs", "50"});
  ASSERT_EQ(train.code, kExitOk) << train.err;
  CliRun eval = RunJobstd({"evaluate", "--model", (dir / "m.json").string(), "--data",
                     (dir / "examples.jsonl").string(), "--json"});
  ASSERT_EQ(eval.code, kExitOk) << eval.err;
  Json report = Json::parse(eval.out);
  for (const char *key : {"log_loss", "accuracy", "auc", "precision_at_k", "k",
                          "examples"}) {
    EXPECT_TRUE(report.contains(key)) << key;
  }
  EXPECT_EQ(RunJobstd({"train", "--kind", "forest", "--data",
                 (dir / "examples.jsonl").string(), "--out",
                 (dir / "x.json").string()})
                .code,
            kExitUsage);
  testing::WriteFileBytes(dir / "broken.jsonl", "{\"features\": [1]}\n");
  EXPECT_EQ(RunJobstd({"train", "--kind", "linear", "--data",
                 (dir / "broken.jsonl").string(), "--out",
                 (dir / "y.json").string()})
                .code,
            kExitData);
}

TEST(CliTest, FeaturesPrintsNamedValues) {
  testing::TempDir dir;
  CliRun run = RunJobstd({"features", DataArg(), "--posting",
                    (testing::DataDir() / "demo_posting.json").string(),
                    "--entity", "skill:s_python"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  Json json = Json::parse(run.out);
  EXPECT_EQ(json["features"].size(), kFeatureCount);
  EXPECT_GT(json["features"]["mention_count"].get<double>(), 0.0);
  EXPECT_EQ(RunJobstd({"features", DataArg(), "--posting",
                 (testing::DataDir() / "demo_posting.json").string(), "--entity",
                 "nonsense"})
                .code,
            kExitUsage);
}

TEST(CliTest, FeedbackStatsOnEmptyLog) {
  testing::TempDir dir;
  testing::WriteFileBytes(dir / "events.jsonl", "");
  CliRun run = RunJobstd({"feedback", "stats", (dir / "events.jsonl").string(), "--json"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(Json::parse(run.out)["events"], 0);
}

TEST(CliTest, FeedbackStatsRateIsOverDecisions) {
  testing::TempDir dir;
  std::string lines;
  for (auto [entity, action] : std::vector<std::pair<std::string, FeedbackAction>>{
           {"a", FeedbackAction::kShown},
           {"a", FeedbackAction::kAccepted},
           {"b", FeedbackAction::kShown},
           {"b", FeedbackAction::kRejected}}) {
    FeedbackEvent e;
    e.suggestion_id = "s";
    e.posting_id = "p";
    e.entity_id = entity;
    e.action = action;
    e.feature_snapshot.assign(kFeatureCount, 0.0);
    e.event_id = MakeEventId("s", e.entity_type, entity, action);
    lines += EventToLine(e) + "\n";
  }
  testing::WriteFileBytes(dir / "events.jsonl", lines);
  CliRun run =
      RunJobstd({"feedback", "stats", (dir / "events.jsonl").string(), "--json"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  Json report = Json::parse(run.out);
  EXPECT_EQ(report["decisions"], 2);
  EXPECT_EQ(report["acceptance_rate"], 0.5);
  EXPECT_EQ(report["shown"], 4);
}

}  // namespace
}  // namespace jobstd
