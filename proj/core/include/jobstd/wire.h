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

#ifndef JOBSTD_WIRE_H_
#define JOBSTD_WIRE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "jobstd/feature_vector.h"
#include "jobstd/feedback.h"
#include "jobstd/gbdt.h"
#include "jobstd/linear_model.h"
#include "jobstd/market_stats.h"
#include "jobstd/question.h"
#include "jobstd/ranker.h"
#include "jobstd/tagger.h"

// JSON encodings of every record that crosses a file or network boundary.
// Decoders throw Error(kInvalidArgument) (or Error(kSchemaMismatch) for a
// foreign feature schema); the line readers rethrow as MalformedRecord.
namespace jobstd {

using Json = nlohmann::json;

// Calls `fn` on every non-blank line parsed as JSON, with its 1-based line
// number. Parse errors and Errors thrown by `fn` become MalformedRecord.
void ForEachJsonLine(std::istream &in,
                     const std::function<void(const Json &, size_t)> &fn);

Json ReadJsonFile(const std::filesystem::path &path);
// Pretty-printed with a trailing newline.
void WriteJsonFile(const std::filesystem::path &path, const Json &value);

// Postings.
Json ToJson(const JobPosting &posting);
// Requires string posting_id and raw_title; other fields default to "".
JobPosting PostingFromJson(const Json &json);
std::vector<JobPosting> ReadPostings(std::istream &in);
std::vector<JobPosting> ReadPostings(const std::filesystem::path &path);

Json ToJson(const EntityMention &mention, const std::string &posting_id);

// Features.
Json FeaturesToJson(const FeatureVector &features);
FeatureVector FeaturesFromJson(const Json &json,
                               int schema_version = kFeatureSchemaVersion);
// {name: value} map plus schema_version and flags, for debugging output.
Json FeatureMap(const FeatureVector &features);

// Training examples.
Json ToJson(const TrainingExample &example);
TrainingExample ExampleFromJson(const Json &json);
std::vector<TrainingExample> ReadExamples(std::istream &in);
std::vector<TrainingExample> ReadExamples(const std::filesystem::path &path);
void WriteExamples(std::span<const TrainingExample> examples,
                   std::ostream &out);

// Labeled sentences for the question classifier: {"text", "label"}.
Json ToJson(const LabeledSentence &sentence);
LabeledSentence SentenceFromJson(const Json &json);
std::vector<LabeledSentence> ReadSentences(std::istream &in);
std::vector<LabeledSentence> ReadSentences(const std::filesystem::path &path);

Json ToJson(const RankedSuggestion &suggestion);

// Market statistics.
Json ToJson(const MarketStats &stats);
MarketStats StatsFromJson(const Json &json);

// Feedback events. The encoding is canonical: decoding and re-encoding a
// line reproduces it byte for byte.
Json ToJson(const FeedbackEvent &event);
FeedbackEvent EventFromJson(const Json &json);
std::string EventToLine(const FeedbackEvent &event);

// Model files.
inline constexpr std::string_view kModelFormat = "jobstd-model";

using AnyModel = std::variant<LinearModel, GbdtModel, QuestionModel>;

struct ModelArtifact {
  AnyModel model;
  int64_t version = 1;
  std::optional<EntityType> entity_type;

  bool operator==(const ModelArtifact &) const = default;
};

// "linear", "gbdt" or "question".
std::string_view ModelKind(const AnyModel &model);
Json ToJson(const ModelArtifact &artifact);
ModelArtifact ModelFromJson(const Json &json);
void SaveModel(const ModelArtifact &artifact,
               const std::filesystem::path &path);
ModelArtifact LoadModel(const std::filesystem::path &path);
// Throws Error(kInvalidArgument) if the artifact is a question model.
RankModel ToRankModel(const ModelArtifact &artifact);

}  // namespace jobstd

#endif  // JOBSTD_WIRE_H_
