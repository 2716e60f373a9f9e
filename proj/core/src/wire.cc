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

#include <cmath>
#include <fstream>
#include <sstream>

#include "jobstd/error.h"

namespace jobstd {

namespace {

[[noreturn]] void Invalid(const std::string &message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

const Json &Require(const Json &json, const char *name) {
  if (!json.is_object()) Invalid("expected a JSON object");
  auto it = json.find(name);
  if (it == json.end()) Invalid(std::string("missing field '") + name + "'");
  return *it;
}

std::string RequireString(const Json &json, const char *name) {
  const Json &v = Require(json, name);
  if (!v.is_string()) Invalid(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::string OptionalString(const Json &json, const char *name) {
  auto it = json.find(name);
  if (it == json.end() || it->is_null()) return {};
  if (!it->is_string()) {
    Invalid(std::string("field '") + name + "' must be a string");
  }
  return it->get<std::string>();
}

double RequireNumber(const Json &json, const char *name) {
  const Json &v = Require(json, name);
  if (!v.is_number()) Invalid(std::string("field '") + name + "' must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) Invalid(std::string("field '") + name + "' is not finite");
  return d;
}

int64_t RequireInt(const Json &json, const char *name) {
  const Json &v = Require(json, name);
  if (!v.is_number_integer()) {
    Invalid(std::string("field '") + name + "' must be an integer");
  }
  return v.get<int64_t>();
}

std::vector<double> NumberArray(const Json &json, const char *what) {
  if (!json.is_array()) Invalid(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(json.size());
  for (const Json &v : json) {
    if (!v.is_number()) Invalid(std::string(what) + " must hold numbers");
    double d = v.get<double>();
    if (!std::isfinite(d)) Invalid(std::string(what) + " holds a non-finite value");
    out.push_back(d);
  }
  return out;
}

EntityType RequireEntityType(const Json &json, const char *name) {
  std::string s = RequireString(json, name);
  std::optional<EntityType> type = ParseEntityType(s);
  if (!type) Invalid("unknown entity type '" + s + "'");
  return *type;
}

std::ifstream OpenInput(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

Json EntityJson(const EntityKey &key) {
  return {{"type", EntityTypeName(key.type)}, {"id", key.id}};
}

EntityKey EntityFromJson(const Json &json) {
  return {RequireEntityType(json, "type"), RequireString(json, "id")};
}

}  // namespace

void ForEachJsonLine(std::istream &in,
                     const std::function<void(const Json &, size_t)> &fn) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json json;
    try {
      json = Json::parse(line);
    } catch (const Json::exception &e) {
      throw MalformedRecord(line_no, e.what());
    }
    try {
      fn(json, line_no);
    } catch (const MalformedRecord &) {
      throw;
    } catch (const Error &e) {
      throw MalformedRecord(line_no, e.what());
    } catch (const Json::exception &e) {
      throw MalformedRecord(line_no, e.what());
    }
  }
}

Json ReadJsonFile(const std::filesystem::path &path) {
  std::ifstream in = OpenInput(path);
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument,
                path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path &path, const Json &value) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << value.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

// Postings ----------------------------------------------------------------

Json ToJson(const JobPosting &p) {
  return {{"posting_id", p.posting_id},       {"raw_title", p.raw_title},
          {"description", p.description},     {"location", p.location},
          {"company_field", p.company_field}, {"contact_email", p.contact_email},
          {"industry", p.industry}};
}

JobPosting PostingFromJson(const Json &json) {
  JobPosting p;
  p.posting_id = RequireString(json, "posting_id");
  p.raw_title = RequireString(json, "raw_title");
  p.description = OptionalString(json, "description");
  p.location = OptionalString(json, "location");
  p.company_field = OptionalString(json, "company_field");
  p.contact_email = OptionalString(json, "contact_email");
  p.industry = OptionalString(json, "industry");
  p.Validate();
  return p;
}

std::vector<JobPosting> ReadPostings(std::istream &in) {
  std::vector<JobPosting> out;
  ForEachJsonLine(in, [&](const Json &json, size_t) {
    out.push_back(PostingFromJson(json));
  });
  return out;
}

std::vector<JobPosting> ReadPostings(const std::filesystem::path &path) {
  std::ifstream in = OpenInput(path);
  return ReadPostings(in);
}

Json ToJson(const EntityMention &m, const std::string &posting_id) {
  return {{"posting_id", posting_id},
          {"entity_type", EntityTypeName(m.entity_type)},
          {"entity_id", m.entity_id},
          {"field", FieldName(m.field)},
          {"start", m.char_span.begin},
          {"end", m.char_span.end},
          {"start_token", m.start_token},
          {"end_token", m.end_token},
          {"surface", m.surface}};
}

// Features ----------------------------------------------------------------

Json FeaturesToJson(const FeatureVector &features) {
  return Json(features.values);
}

FeatureVector FeaturesFromJson(const Json &json, int schema_version) {
  if (schema_version != kFeatureSchemaVersion) {
    throw Error(ErrorCode::kSchemaMismatch,
                "feature schema " + std::to_string(schema_version) +
                    " is not supported (expected " +
                    std::to_string(kFeatureSchemaVersion) + ")");
  }
  std::vector<double> values = NumberArray(json, "features");
  if (values.size() != kFeatureCount) {
    Invalid("features must have " + std::to_string(kFeatureCount) +
            " values, got " + std::to_string(values.size()));
  }
  FeatureVector x;
  std::copy(values.begin(), values.end(), x.values.begin());
  x.schema_version = schema_version;
  return x;
}

Json FeatureMap(const FeatureVector &features) {
  Json values = Json::object();
  for (size_t i = 0; i < kFeatureCount; ++i) {
    values[std::string(kFeatureNames[i])] = features[i];
  }
  return {{"schema_version", features.schema_version},
          {"flags", features.flags},
          {"features", values}};
}

// Training examples ---------------------------------------------------------

std::string_view ExampleSourceName(ExampleSource source) {
  return source == ExampleSource::kSeed ? "seed" : "feedback";
}

Json ToJson(const TrainingExample &ex) {
  Json json = {{"features", FeaturesToJson(ex.features)},
               {"label", ex.label},
               {"weight", ex.weight},
               {"source", ExampleSourceName(ex.source)}};
  if (ex.features.schema_version != kFeatureSchemaVersion) {
    json["schema_version"] = ex.features.schema_version;
  }
  if (!ex.group.empty()) json["posting_id"] = ex.group;
  if (ex.entity_type) json["entity_type"] = EntityTypeName(*ex.entity_type);
  if (!ex.entity_id.empty()) json["entity_id"] = ex.entity_id;
  return json;
}

TrainingExample ExampleFromJson(const Json &json) {
  TrainingExample ex;
  int schema = kFeatureSchemaVersion;
  if (json.contains("schema_version")) {
    schema = static_cast<int>(RequireInt(json, "schema_version"));
  }
  ex.features = FeaturesFromJson(Require(json, "features"), schema);
  int64_t label = RequireInt(json, "label");
  if (label != 0 && label != 1) Invalid("label must be 0 or 1");
  ex.label = static_cast<int>(label);
  ex.weight = json.contains("weight") ? RequireNumber(json, "weight") : 1.0;
  if (!(ex.weight > 0.0)) Invalid("weight must be positive");
  std::string source = OptionalString(json, "source");
  if (source.empty() || source == "seed") {
    ex.source = ExampleSource::kSeed;
  } else if (source == "feedback") {
    ex.source = ExampleSource::kFeedback;
  } else {
    Invalid("unknown example source '" + source + "'");
  }
  ex.group = OptionalString(json, "posting_id");
  if (json.contains("entity_type")) {
    ex.entity_type = RequireEntityType(json, "entity_type");
  }
  ex.entity_id = OptionalString(json, "entity_id");
  return ex;
}

std::vector<TrainingExample> ReadExamples(std::istream &in) {
  std::vector<TrainingExample> out;
  ForEachJsonLine(in, [&](const Json &json, size_t) {
    out.push_back(ExampleFromJson(json));
  });
  return out;
}

std::vector<TrainingExample> ReadExamples(const std::filesystem::path &path) {
  std::ifstream in = OpenInput(path);
  return ReadExamples(in);
}

void WriteExamples(std::span<const TrainingExample> examples,
                   std::ostream &out) {
  for (const TrainingExample &ex : examples) out << ToJson(ex).dump() << '\n';
}

Json ToJson(const LabeledSentence &sentence) {
  return {{"text", sentence.text}, {"label", sentence.label}};
}

LabeledSentence SentenceFromJson(const Json &json) {
  LabeledSentence s;
  s.text = RequireString(json, "text");
  s.label = RequireString(json, "label");
  if (s.label.empty()) Invalid("empty label");
  return s;
}

std::vector<LabeledSentence> ReadSentences(std::istream &in) {
  std::vector<LabeledSentence> out;
  ForEachJsonLine(in, [&](const Json &json, size_t) {
    out.push_back(SentenceFromJson(json));
  });
  return out;
}

std::vector<LabeledSentence> ReadSentences(const std::filesystem::path &path) {
  std::ifstream in = OpenInput(path);
  return ReadSentences(in);
}

Json ToJson(const RankedSuggestion &s) {
  return {{"entity_type", EntityTypeName(s.entity_type)},
          {"entity_id", s.entity_id},
          {"score", s.score},
          {"rank", s.rank}};
}

// Market statistics ---------------------------------------------------------

Json ToJson(const MarketStats &stats) {
  Json industries = Json::object();
  for (const auto &[industry, count] : stats.industries()) {
    industries[industry] = count;
  }
  Json entities = Json::array();
  for (const auto &[key, count] : stats.entities()) {
    Json e = EntityJson(key);
    e["count"] = count;
    entities.push_back(std::move(e));
  }
  Json pairs = Json::array();
  for (const auto &[key, count] : stats.pairs()) {
    Json e = EntityJson(key.second);
    e["industry"] = key.first;
    e["count"] = count;
    pairs.push_back(std::move(e));
  }
  Json acceptance = Json::array();
  for (const auto &[key, counter] : stats.acceptance_counters()) {
    Json e = EntityJson(key.first);
    e["industry"] = key.second;
    e["shown"] = counter.shown;
    e["accepted"] = counter.accepted;
    acceptance.push_back(std::move(e));
  }
  return {{"total", stats.total()},
          {"distinct_pairs", stats.distinct_pairs()},
          {"industries", industries},
          {"entities", entities},
          {"pairs", pairs},
          {"acceptance", acceptance}};
}

MarketStats StatsFromJson(const Json &json) {
  MarketStats stats;
  const Json &pairs = Require(json, "pairs");
  if (!pairs.is_array()) Invalid("pairs must be an array");
  for (const Json &p : pairs) {
    int64_t count = RequireInt(p, "count");
    if (count < 0) Invalid("negative pair count");
    stats.AddCooccurrence(RequireString(p, "industry"), EntityFromJson(p), count);
  }
  const Json &acceptance = Require(json, "acceptance");
  if (!acceptance.is_array()) Invalid("acceptance must be an array");
  for (const Json &a : acceptance) {
    AcceptanceCounter counter{RequireInt(a, "shown"), RequireInt(a, "accepted")};
    if (counter.shown < 0 || counter.accepted < 0 ||
        counter.accepted > counter.shown) {
      Invalid("acceptance counter must satisfy 0 <= accepted <= shown");
    }
    stats.AddAcceptance(EntityFromJson(a), RequireString(a, "industry"), counter);
  }
  // The marginals are implied by the pairs; stored copies must agree.
  if (json.contains("total") && RequireInt(json, "total") != stats.total()) {
    Invalid("total does not match the pair counts");
  }
  return stats;
}

// Feedback events -----------------------------------------------------------

Json ToJson(const FeedbackEvent &e) {
  Json json = {{"event_id", e.event_id},
               {"suggestion_id", e.suggestion_id},
               {"posting_id", e.posting_id},
               {"entity_type", EntityTypeName(e.entity_type)},
               {"entity_id", e.entity_id},
               {"action", FeedbackActionName(e.action)},
               {"industry", e.industry},
               {"feature_snapshot", e.feature_snapshot},
               {"schema_version", e.schema_version},
               {"timestamp", e.timestamp_ms}};
  if (e.replacement_entity_id) {
    json["replacement_entity_id"] = *e.replacement_entity_id;
  }
  return json;
}

FeedbackEvent EventFromJson(const Json &json) {
  FeedbackEvent e;
  e.event_id = RequireString(json, "event_id");
  e.suggestion_id = RequireString(json, "suggestion_id");
  e.posting_id = RequireString(json, "posting_id");
  e.entity_type = RequireEntityType(json, "entity_type");
  e.entity_id = RequireString(json, "entity_id");
  std::string action = RequireString(json, "action");
  std::optional<FeedbackAction> parsed = ParseFeedbackAction(action);
  if (!parsed) Invalid("unknown action '" + action + "'");
  e.action = *parsed;
  if (json.contains("replacement_entity_id")) {
    e.replacement_entity_id = RequireString(json, "replacement_entity_id");
  }
  e.industry = OptionalString(json, "industry");
  e.feature_snapshot =
      NumberArray(Require(json, "feature_snapshot"), "feature_snapshot");
  e.schema_version = static_cast<int>(RequireInt(json, "schema_version"));
  e.timestamp_ms = RequireInt(json, "timestamp");
  return e;
}

std::string EventToLine(const FeedbackEvent &event) {
  return ToJson(event).dump();
}

// Models --------------------------------------------------------------------

std::string_view ModelKind(const AnyModel &model) {
  switch (model.index()) {
    case 0:
      return "linear";
    case 1:
      return "gbdt";
    default:
      return "question";
  }
}

namespace {

Json TreeToJson(const RegressionTree &tree) {
  Json nodes = Json::array();
  for (const TreeNode &n : tree.nodes) {
    if (n.is_leaf()) {
      nodes.push_back({{"leaf", n.value}});
    } else {
      nodes.push_back({{"feature", n.feature},
                       {"threshold", n.threshold},
                       {"left", n.left},
                       {"right", n.right}});
    }
  }
  return nodes;
}

RegressionTree TreeFromJson(const Json &json) {
  if (!json.is_array() || json.empty()) Invalid("tree must be a non-empty array");
  RegressionTree tree;
  const auto size = static_cast<int64_t>(json.size());
  for (int64_t i = 0; i < size; ++i) {
    const Json &n = json[static_cast<size_t>(i)];
    TreeNode node;
    if (n.contains("leaf")) {
      node.value = RequireNumber(n, "leaf");
    } else {
      int64_t feature = RequireInt(n, "feature");
      if (feature < 0 || feature >= static_cast<int64_t>(kFeatureCount)) {
        Invalid("tree feature index out of range");
      }
      int64_t left = RequireInt(n, "left");
      int64_t right = RequireInt(n, "right");
      // Children follow their parent, which rules out cycles.
      if (left <= i || right <= i || left >= size || right >= size) {
        Invalid("tree child index out of range");
      }
      node.feature = static_cast<int32_t>(feature);
      node.threshold = RequireNumber(n, "threshold");
      node.left = static_cast<int32_t>(left);
      node.right = static_cast<int32_t>(right);
    }
    tree.nodes.push_back(node);
  }
  return tree;
}

Json ModelBody(const LinearModel &m) {
  return {{"weights", m.weights}, {"bias", m.bias}};
}

Json ModelBody(const GbdtModel &m) {
  Json trees = Json::array();
  for (const RegressionTree &t : m.trees) trees.push_back(TreeToJson(t));
  return {{"learning_rate", m.learning_rate},
          {"base_score", m.base_score},
          {"max_depth", m.max_depth},
          {"trees", trees}};
}

Json ModelBody(const QuestionModel &m) {
  return {{"classes", m.classes},
          {"weights", m.weights},
          {"bias", m.bias},
          {"projection",
           {{"weights", m.projection.weights}, {"bias", m.projection.bias}}},
          {"trained", m.trained}};
}

LinearModel LinearFromJson(const Json &json) {
  LinearModel m;
  std::vector<double> w = NumberArray(Require(json, "weights"), "weights");
  if (w.size() != kFeatureCount) Invalid("linear model needs 14 weights");
  std::copy(w.begin(), w.end(), m.weights.begin());
  m.bias = RequireNumber(json, "bias");
  return m;
}

GbdtModel GbdtFromJson(const Json &json) {
  GbdtModel m;
  m.learning_rate = RequireNumber(json, "learning_rate");
  m.base_score = RequireNumber(json, "base_score");
  m.max_depth = static_cast<int>(RequireInt(json, "max_depth"));
  const Json &trees = Require(json, "trees");
  if (!trees.is_array()) Invalid("trees must be an array");
  for (const Json &t : trees) {
    m.trees.push_back(TreeFromJson(t));
    if (m.trees.back().Depth() > m.max_depth) Invalid("tree deeper than max_depth");
  }
  return m;
}

QuestionModel QuestionFromJson(const Json &json) {
  QuestionModel m;
  const Json &classes = Require(json, "classes");
  if (!classes.is_array()) Invalid("classes must be an array");
  for (const Json &c : classes) {
    if (!c.is_string()) Invalid("classes must be strings");
    m.classes.push_back(c.get<std::string>());
  }
  const Json &weights = Require(json, "weights");
  if (!weights.is_array()) Invalid("weights must be an array");
  for (const Json &row : weights) m.weights.push_back(NumberArray(row, "weights"));
  m.bias = NumberArray(Require(json, "bias"), "bias");
  const Json &projection = Require(json, "projection");
  m.projection.weights =
      NumberArray(Require(projection, "weights"), "projection weights");
  m.projection.bias = NumberArray(Require(projection, "bias"), "projection bias");
  const Json &trained = Require(json, "trained");
  if (!trained.is_boolean()) Invalid("trained must be a boolean");
  m.trained = trained.get<bool>();
  size_t d = m.projection.bias.size();
  if (m.projection.weights.size() != d * d) Invalid("projection must be d x d");
  if (m.weights.size() != m.classes.size() || m.bias.size() != m.classes.size()) {
    Invalid("one weight row and bias per class required");
  }
  for (const Vector &row : m.weights) {
    if (row.size() != d) Invalid("class weight rows must have length d");
  }
  return m;
}

}  // namespace

Json ToJson(const ModelArtifact &artifact) {
  Json json = std::visit([](const auto &m) { return ModelBody(m); },
                         artifact.model);
  json["format"] = kModelFormat;
  json["kind"] = ModelKind(artifact.model);
  json["version"] = artifact.version;
  json["schema_version"] = kFeatureSchemaVersion;
  if (artifact.entity_type) {
    json["entity_type"] = EntityTypeName(*artifact.entity_type);
  }
  if (!std::holds_alternative<QuestionModel>(artifact.model)) {
    json["feature_names"] = kFeatureNames;
  }
  return json;
}

ModelArtifact ModelFromJson(const Json &json) {
  if (OptionalString(json, "format") != kModelFormat) {
    Invalid("not a jobstd model file");
  }
  int64_t schema = RequireInt(json, "schema_version");
  if (schema != kFeatureSchemaVersion) {
    throw Error(ErrorCode::kSchemaMismatch,
                "model feature schema " + std::to_string(schema) +
                    " is not supported");
  }
  ModelArtifact artifact;
  artifact.version = RequireInt(json, "version");
  if (json.contains("entity_type")) {
    artifact.entity_type = RequireEntityType(json, "entity_type");
  }
  std::string kind = RequireString(json, "kind");
  if (kind == "linear") {
    artifact.model = LinearFromJson(json);
  } else if (kind == "gbdt") {
    artifact.model = GbdtFromJson(json);
  } else if (kind == "question") {
    artifact.model = QuestionFromJson(json);
  } else {
    Invalid("unknown model kind '" + kind + "'");
  }
  return artifact;
}

void SaveModel(const ModelArtifact &artifact,
               const std::filesystem::path &path) {
  WriteJsonFile(path, ToJson(artifact));
}

ModelArtifact LoadModel(const std::filesystem::path &path) {
  Json json = ReadJsonFile(path);
  try {
    return ModelFromJson(json);
  } catch (const Error &e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

RankModel ToRankModel(const ModelArtifact &artifact) {
  if (const auto *m = std::get_if<LinearModel>(&artifact.model)) return *m;
  if (const auto *m = std::get_if<GbdtModel>(&artifact.model)) return *m;
  Invalid("a question model cannot rank candidates");
}

}  // namespace jobstd
