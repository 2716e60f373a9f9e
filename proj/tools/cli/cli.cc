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

#include <pthread.h>
#include <signal.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "jobstd/candidates.h"
#include "jobstd/embedding.h"
#include "jobstd/error.h"
#include "jobstd/features.h"
#include "jobstd/feedback.h"
#include "jobstd/market_stats.h"
#include "jobstd/metrics.h"
#include "jobstd/model_store.h"
#include "jobstd/pipeline.h"
#include "jobstd/question.h"
#include "jobstd/ranker.h"
#include "jobstd/retrain.h"
#include "jobstd/service/api.h"
#include "jobstd/service/config.h"
#include "jobstd/service/http_server.h"
#include "jobstd/service/registry.h"
#include "jobstd/service/stream.h"
#include "jobstd/synth.h"
#include "jobstd/tagger.h"
#include "jobstd/taxonomy.h"
#include "jobstd/wire.h"

namespace jobstd {
namespace {

namespace fs = std::filesystem;

// A problem with the invocation rather than with the data.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void RequireFile(const std::string &path, const char *what) {
  if (path.empty()) throw UsageError(std::string(what) + " is required");
  if (!fs::is_regular_file(path)) {
    throw UsageError(std::string(what) + " '" + path + "' is not a file");
  }
}

// Output file, or `fallback` for "" and "-".
class Output {
 public:
  Output(const std::string &path, std::ostream &fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    file_.open(p, std::ios::binary | std::ios::trunc);
    if (!file_) throw Error(ErrorCode::kIo, "cannot write " + path);
    stream_ = &file_;
  }

  std::ostream &stream() { return *stream_; }

  void Close() {
    stream_->flush();
    if (!*stream_) throw Error(ErrorCode::kIo, "write failed");
    if (file_.is_open()) file_.close();
  }

 private:
  std::ofstream file_;
  std::ostream *stream_ = nullptr;
};

// Shared inputs of the commands that need the taxonomy, the embeddings or
// the posting templates. Each defaults to a file under --data-dir.
struct DataOptions {
  std::string data_dir;
  std::string taxonomy;
  std::string embeddings;
  std::string templates;

  void Register(CLI::App *cmd) {
    const char *env = std::getenv("JOBSTD_DATA_DIR");
    data_dir = env != nullptr ? env : "data";
    cmd->add_option("--data-dir", data_dir,
                    "Directory with taxonomy.jsonl, embeddings.txt and "
                    "templates.json (default: $JOBSTD_DATA_DIR or ./data)");
    cmd->add_option("--taxonomy", taxonomy, "Taxonomy JSON Lines file");
    cmd->add_option("--embeddings", embeddings, "Embedding table");
    cmd->add_option("--templates", templates, "Synthetic posting templates");
  }

  std::string Resolve(const std::string &explicit_path,
                      const char *file) const {
    return explicit_path.empty() ? (fs::path(data_dir) / file).string()
                                 : explicit_path;
  }
  std::string TaxonomyPath() const { return Resolve(taxonomy, "taxonomy.jsonl"); }
  std::string EmbeddingsPath() const {
    return Resolve(embeddings, "embeddings.txt");
  }
  std::string TemplatesPath() const {
    return Resolve(templates, "templates.json");
  }

  // Checks that the files the command will read exist.
  void Validate(bool need_embeddings, bool need_templates) const {
    RequireFile(TaxonomyPath(), "--taxonomy");
    if (need_embeddings) RequireFile(EmbeddingsPath(), "--embeddings");
    if (need_templates) RequireFile(TemplatesPath(), "--templates");
  }

  std::shared_ptr<const Taxonomy> LoadTaxonomyFile() const {
    return std::make_shared<const Taxonomy>(LoadTaxonomy(TaxonomyPath()));
  }
  std::shared_ptr<const EmbeddingTable> LoadEmbeddingFile() const {
    return std::make_shared<const EmbeddingTable>(
        LoadEmbeddings(EmbeddingsPath()));
  }
};

EntityType ParseTypeFlag(const std::string &name) {
  std::optional<EntityType> type = ParseEntityType(name);
  if (!type) throw UsageError("unknown entity type '" + name + "'");
  return *type;
}

std::vector<std::string> QuestionIds(const Taxonomy &taxonomy) {
  std::vector<std::string> ids;
  for (const TaxonomyEntity *e : taxonomy.OfType(EntityType::kQuestion)) {
    ids.push_back(e->id);
  }
  return ids;
}

std::vector<TrainingExample> OfType(std::span<const TrainingExample> data,
                                    std::optional<EntityType> type) {
  std::vector<TrainingExample> out;
  for (const TrainingExample &ex : data) {
    if (!type || !ex.entity_type || *ex.entity_type == *type) out.push_back(ex);
  }
  return out;
}

void WriteJsonLine(std::ostream &out, const Json &json) {
  out << json.dump() << '\n';
}

std::string Fixed(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << value;
  return s.str();
}

// taxonomy validate ---------------------------------------------------------

struct TaxonomyValidateCommand {
  std::string path;

  void Register(CLI::App *parent) {
    CLI::App *tax = parent->add_subcommand("taxonomy", "Taxonomy utilities");
    tax->require_subcommand(1);
    CLI::App *cmd = tax->add_subcommand(
        "validate", "Load and validate a taxonomy; report the first error");
    cmd->add_option("path", path, "Taxonomy JSON Lines file")->required();
  }

  int Run(std::ostream &out) const {
    RequireFile(path, "path");
    Taxonomy taxonomy = LoadTaxonomy(path);
    out << "ok: " << taxonomy.size() << " entities";
    for (EntityType type : kAllEntityTypes) {
      out << ", " << EntityTypeName(type) << " " << taxonomy.count(type);
    }
    out << '\n';
    return kExitOk;
  }
};

// tag -----------------------------------------------------------------------

struct TagCommand {
  std::string taxonomy;
  std::string input;
  std::string type = "skill";
  std::string out_path;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "tag", "Tag entity mentions in postings; one JSON line per mention");
    cmd->add_option("--taxonomy", taxonomy, "Taxonomy JSON Lines file")
        ->required();
    cmd->add_option("--input", input, "Postings JSON Lines file")->required();
    cmd->add_option("--type", type, "title, skill, company or question");
    cmd->add_option("--out", out_path, "Output file (default: stdout)");
  }

  int Run(std::ostream &out) const {
    RequireFile(taxonomy, "--taxonomy");
    RequireFile(input, "--input");
    EntityType entity_type = ParseTypeFlag(type);
    Taxonomy tax = LoadTaxonomy(taxonomy);
    Matcher matcher = Matcher::Build(tax, entity_type);
    std::ifstream in(input, std::ios::binary);
    Output output(out_path, out);
    ForEachJsonLine(in, [&](const Json &json, size_t) {
      JobPosting posting = PostingFromJson(json);
      for (const EntityMention &m : Tag(matcher, posting)) {
        WriteJsonLine(output.stream(), ToJson(m, posting.posting_id));
      }
    });
    output.Close();
    return kExitOk;
  }
};

// features ------------------------------------------------------------------

JobPosting ReadOnePosting(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return PostingFromJson(Json::parse(buffer.str()));
  } catch (const Json::exception &) {
    // Not a single document; take the first line of a JSON Lines file.
    std::vector<JobPosting> postings = ReadPostings(fs::path(path));
    if (postings.empty()) {
      throw Error(ErrorCode::kMalformedRecord, path + ": no posting");
    }
    return postings.front();
  }
}

struct FeaturesCommand {
  DataOptions data;
  std::string posting;
  std::string entity;
  std::string stats;
  std::string classifier;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "features", "Print the ranking features of one entity for a posting");
    data.Register(cmd);
    cmd->add_option("--posting", posting,
                    "Posting JSON (or the first line of a JSON Lines file)")
        ->required();
    cmd->add_option("--entity", entity, "Entity as <type>:<id>")->required();
    cmd->add_option("--stats", stats, "Market statistics snapshot");
    cmd->add_option("--classifier", classifier,
                    "Question classifier model, for question peers");
  }

  int Run(std::ostream &out) const {
    data.Validate(true, false);
    RequireFile(posting, "--posting");
    if (!stats.empty()) RequireFile(stats, "--stats");
    if (!classifier.empty()) RequireFile(classifier, "--classifier");
    size_t colon = entity.find(':');
    if (colon == std::string::npos) {
      throw UsageError("--entity must be <type>:<id>");
    }
    EntityKey key{ParseTypeFlag(entity.substr(0, colon)),
                  entity.substr(colon + 1)};

    auto taxonomy = data.LoadTaxonomyFile();
    const TaxonomyEntity *target = taxonomy->Lookup(key.type, key.id);
    if (target == nullptr) {
      throw Error(ErrorCode::kNotFound, "no entity " + ToString(key));
    }
    auto embeddings = data.LoadEmbeddingFile();
    MarketStats market =
        stats.empty() ? MarketStats() : StatsFromJson(ReadJsonFile(stats));
    std::unique_ptr<QuestionClassifier> clf;
    if (!classifier.empty()) {
      ModelArtifact artifact = LoadModel(classifier);
      auto *model = std::get_if<QuestionModel>(&artifact.model);
      if (model == nullptr) {
        throw Error(ErrorCode::kInvalidArgument,
                    classifier + " is not a question model");
      }
      clf = std::make_unique<QuestionClassifier>(*model, embeddings);
    }
    JobPosting p = ReadOnePosting(posting);
    CandidateGenerator generator(taxonomy);
    std::vector<Candidate> peers = CandidatesFor(key.type, p, generator, clf.get());
    const Candidate *candidate = nullptr;
    for (const Candidate &c : peers) {
      if (c.key == key) candidate = &c;
    }
    Candidate unmentioned{key, target->canonical_name, {}};
    if (candidate == nullptr) candidate = &unmentioned;

    SentenceEncoder encoder(embeddings);
    FeatureExtractor extractor(*taxonomy, encoder, market);
    PostingContext context(p, encoder);
    FeatureVector x = extractor.Extract(context, *candidate, peers);
    out << FeatureMap(x).dump(2) << '\n';
    return kExitOk;
  }
};

// generate ------------------------------------------------------------------

struct GenerateCommand {
  DataOptions data;
  size_t n = 200;
  uint64_t seed = 1;
  std::string out_dir;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "generate",
        "Generate synthetic seed data: postings.jsonl, examples.jsonl and "
        "sentences.jsonl");
    data.Register(cmd);
    cmd->add_option("--n", n, "Number of postings");
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--out-dir", out_dir, "Output directory")->required();
  }

  int Run(std::ostream &out) const {
    data.Validate(true, true);
    SeedData seed_data =
        GenerateSeedData(data.LoadTaxonomyFile(), data.LoadEmbeddingFile(),
                         LoadTemplates(data.TemplatesPath()), n, seed);
    fs::path dir(out_dir);
    fs::create_directories(dir);
    Output postings((dir / "postings.jsonl").string(), out);
    for (const GeneratedPosting &g : seed_data.postings) {
      WriteJsonLine(postings.stream(), ToJson(g.posting));
    }
    postings.Close();
    Output examples((dir / "examples.jsonl").string(), out);
    WriteExamples(seed_data.examples, examples.stream());
    examples.Close();
    Output sentences((dir / "sentences.jsonl").string(), out);
    for (const LabeledSentence &s : seed_data.sentences) {
      WriteJsonLine(sentences.stream(), ToJson(s));
    }
    sentences.Close();
    out << "wrote " << seed_data.postings.size() << " postings, "
        << seed_data.examples.size() << " examples, "
        << seed_data.sentences.size() << " sentences to " << out_dir << '\n';
    return kExitOk;
  }
};

// train ---------------------------------------------------------------------

struct TrainCommand {
  DataOptions data;
  std::string kind;
  std::string data_path;
  std::string out_path;
  std::string entity_type;
  int64_t version = 1;
  GbdtTrainOptions gbdt;
  LinearTrainOptions linear;
  QuestionTrainOptions question;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "train", "Train a linear or GBDT ranker, or the question classifier");
    data.Register(cmd);
    cmd->add_option("--kind", kind, "linear, gbdt or question")
        ->required()
        ->check(CLI::IsMember({"linear", "gbdt", "question"}));
    cmd->add_option("--data", data_path,
                    "Training examples (rankers) or labeled sentences "
                    "(question) as JSON Lines")
        ->required();
    cmd->add_option("--out", out_path, "Model file to write")->required();
    cmd->add_option("--entity-type", entity_type,
                    "Train a ranker on examples of this type only");
    cmd->add_option("--version", version, "Version recorded in the model");
    cmd->add_option("--trees", gbdt.num_trees, "GBDT: number of trees");
    cmd->add_option("--depth", gbdt.max_depth, "GBDT: maximum depth");
    cmd->add_option("--min-leaf", gbdt.min_leaf, "GBDT: minimum leaf size");
    cmd->add_option("--shrinkage", gbdt.learning_rate, "GBDT: learning rate");
    cmd->add_option("--epochs", linear.epochs, "Linear: epochs");
    cmd->add_option("--learning-rate", linear.learning_rate,
                    "Linear: initial step size");
    cmd->add_option("--l2", linear.l2, "Linear: L2 penalty");
    cmd->add_option("--question-epochs", question.epochs,
                    "Question: epochs");
  }

  int Run(std::ostream &out) const {
    RequireFile(data_path, "--data");
    if (kind == "question") data.Validate(true, false);
    ModelArtifact artifact;
    artifact.version = version;
    if (kind == "question") {
      auto taxonomy = data.LoadTaxonomyFile();
      auto embeddings = data.LoadEmbeddingFile();
      std::vector<LabeledSentence> sentences = ReadSentences(fs::path(data_path));
      QuestionTrainResult result = TrainQuestionModel(
          sentences, QuestionIds(*taxonomy), *embeddings, question);
      artifact.model = std::move(result.model);
      out << "trained question classifier on " << sentences.size()
          << " sentences, loss " << Fixed(result.loss_history.back()) << '\n';
    } else {
      std::optional<EntityType> type;
      if (!entity_type.empty()) type = ParseTypeFlag(entity_type);
      std::vector<TrainingExample> examples =
          OfType(ReadExamples(fs::path(data_path)), type);
      artifact.entity_type = type;
      RetrainConfig config;
      config.kind = kind == "linear" ? ModelKindOption::kLinear
                                     : ModelKindOption::kGbdt;
      config.linear = linear;
      config.gbdt = gbdt;
      std::visit([&](auto &&m) { artifact.model = std::move(m); },
                 TrainRanker(examples, config));
      out << "trained " << kind << " ranker on " << examples.size()
          << " examples\n";
    }
    SaveModel(artifact, out_path);
    return kExitOk;
  }
};

// evaluate ------------------------------------------------------------------

struct EvaluateCommand {
  DataOptions data;
  std::string model;
  std::string data_path;
  size_t k = 5;
  bool json = false;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "evaluate", "Score a model on held-out examples or sentences");
    data.Register(cmd);
    cmd->add_option("--model", model, "Model file")->required();
    cmd->add_option("--data", data_path, "Examples or sentences JSON Lines")
        ->required();
    cmd->add_option("--k", k, "Cutoff for precision@k")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", json, "Print one JSON object");
  }

  int Run(std::ostream &out) const {
    RequireFile(model, "--model");
    RequireFile(data_path, "--data");
    ModelArtifact artifact = LoadModel(model);
    Json report;
    if (auto *qm = std::get_if<QuestionModel>(&artifact.model)) {
      data.Validate(true, false);
      QuestionClassifier clf(*qm, data.LoadEmbeddingFile());
      std::vector<LabeledSentence> sentences = ReadSentences(fs::path(data_path));
      size_t correct = 0;
      for (const LabeledSentence &s : sentences) {
        if (clf.Classify(s.text).class_id == s.label) ++correct;
      }
      report = {{"accuracy", sentences.empty()
                                 ? 0.0
                                 : static_cast<double>(correct) / sentences.size()},
                {"examples", sentences.size()}};
    } else {
      std::vector<TrainingExample> examples =
          OfType(ReadExamples(fs::path(data_path)), artifact.entity_type);
      EvaluationReport r = Evaluate(ToRankModel(artifact), examples, k);
      report = {{"log_loss", r.log_loss},       {"accuracy", r.accuracy},
                {"auc", r.auc},                 {"precision_at_k", r.precision_at_k},
                {"k", r.k},                     {"examples", r.examples}};
    }
    if (json) {
      WriteJsonLine(out, report);
    } else {
      for (const auto &[name, value] : report.items()) {
        out << std::left << std::setw(16) << name
            << (value.is_number_float() ? Fixed(value.get<double>())
                                        : value.dump())
            << '\n';
      }
    }
    return kExitOk;
  }
};

// feedback stats ------------------------------------------------------------

struct FeedbackStatsCommand {
  std::string log;
  bool json = false;

  void Register(CLI::App *parent) {
    CLI::App *fb = parent->add_subcommand("feedback", "Feedback log utilities");
    fb->require_subcommand(1);
    CLI::App *cmd =
        fb->add_subcommand("stats", "Summarize a feedback event log");
    cmd->add_option("log", log, "Event log (JSON Lines)")->required();
    cmd->add_flag("--json", json, "Print one JSON object");
  }

  int Run(std::ostream &out) const {
    RequireFile(log, "log");
    std::vector<FeedbackEvent> events = ReadEvents(fs::path(log));
    std::map<std::string, int64_t> actions;
    for (FeedbackAction a : {FeedbackAction::kShown, FeedbackAction::kAccepted,
                             FeedbackAction::kRejected,
                             FeedbackAction::kOverridden}) {
      actions[std::string(FeedbackActionName(a))] = 0;
    }
    std::set<std::string> suggestions;
    std::set<std::string> postings;
    for (const FeedbackEvent &e : events) {
      ++actions[std::string(FeedbackActionName(e.action))];
      suggestions.insert(e.suggestion_id);
      postings.insert(e.posting_id);
    }
    MarketStats stats = Aggregate(events);
    int64_t shown = 0;
    int64_t accepted = 0;
    for (const auto &[key, counter] : stats.acceptance_counters()) {
      shown += counter.shown;
      accepted += counter.accepted;
    }
    // Users act at most once per shown suggestion, so the acceptance rate is
    // taken over decisions rather than over the impression counters.
    int64_t decisions = actions["accepted"] + actions["rejected"] +
                        actions["overridden"];
    Json report = {
        {"events", events.size()},
        {"actions", actions},
        {"suggestions", suggestions.size()},
        {"postings", postings.size()},
        {"shown", shown},
        {"accepted", accepted},
        {"decisions", decisions},
        {"acceptance_rate",
         decisions > 0 ? static_cast<double>(actions["accepted"]) / decisions
                       : 0.0},
        {"cooccurrence_total", stats.total()},
        {"distinct_pairs", stats.distinct_pairs()},
    };
    if (json) {
      WriteJsonLine(out, report);
      return kExitOk;
    }
    out << "events           " << events.size() << '\n';
    for (const auto &[name, count] : actions) {
      out << "  " << std::left << std::setw(15) << name << count << '\n';
    }
    out << "suggestions      " << suggestions.size() << '\n'
        << "postings         " << postings.size() << '\n'
        << "acceptance rate  " << Fixed(report["acceptance_rate"].get<double>())
        << " (" << actions["accepted"] << "/" << decisions << " decisions)\n"
        << "distinct pairs   " << stats.distinct_pairs() << '\n';
    return kExitOk;
  }
};

// retrain -------------------------------------------------------------------

struct RetrainCommand {
  std::string log;
  std::string seed;
  std::string config;
  std::string out_dir;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "retrain",
        "Train the next ranker version from seed examples plus feedback");
    cmd->add_option("--log", log, "Feedback event log")->required();
    cmd->add_option("--seed", seed, "Seed training examples")->required();
    cmd->add_option("--config", config, "Retrain configuration JSON");
    cmd->add_option("--out-dir", out_dir, "Models directory")->required();
  }

  int Run(std::ostream &out) const {
    RequireFile(log, "--log");
    RequireFile(seed, "--seed");
    if (!config.empty()) RequireFile(config, "--config");
    RetrainConfig cfg =
        config.empty() ? RetrainConfig() : RetrainConfigFromJson(ReadJsonFile(config));
    std::vector<FeedbackEvent> events = ReadEvents(fs::path(log));
    std::vector<TrainingExample> examples = ReadExamples(fs::path(seed));
    RetrainResult result = Retrain(events, examples, cfg, out_dir);
    WriteJsonLine(out, {{"entity_type", EntityTypeName(cfg.entity_type)},
                        {"version", result.artifact.version},
                        {"model", result.model_path.string()},
                        {"stats", result.stats_path.string()},
                        {"seed_examples", result.seed_examples},
                        {"feedback_examples", result.feedback_examples}});
    return kExitOk;
  }
};

// simulate-feedback ---------------------------------------------------------

struct SimulateCommand {
  DataOptions data;
  std::string model;
  std::string persona;
  SimulationOptions options;
  std::string out_path;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "simulate-feedback",
        "Serve synthetic postings to a simulated user and log the feedback");
    data.Register(cmd);
    cmd->add_option("--model", model, "Ranker for the persona's entity type")
        ->required();
    cmd->add_option("--persona", persona, "Persona JSON")->required();
    cmd->add_option("--rounds", options.rounds, "Postings to serve")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--k", options.k, "Suggestions shown per posting")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", options.seed, "Random seed");
    cmd->add_option("--out", out_path, "Event log to write (default: stdout)");
  }

  int Run(std::ostream &out) const {
    data.Validate(true, true);
    RequireFile(model, "--model");
    RequireFile(persona, "--persona");
    RankModel ranker = ToRankModel(LoadModel(model));
    Persona p = LoadPersona(persona);
    std::vector<FeedbackEvent> events = SimulateFeedback(
        data.LoadTaxonomyFile(), data.LoadEmbeddingFile(),
        LoadTemplates(data.TemplatesPath()), ranker, p, options);
    Output output(out_path, out);
    for (const FeedbackEvent &e : events) output.stream() << EventToLine(e) << '\n';
    output.Close();
    return kExitOk;
  }
};

// bootstrap -----------------------------------------------------------------

struct BootstrapCommand {
  DataOptions data;
  size_t n = 300;
  uint64_t seed = 1;
  std::string kind = "gbdt";
  std::string out_dir;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "bootstrap",
        "Generate seed data and train version 1 of every model into a "
        "models directory");
    data.Register(cmd);
    cmd->add_option("--n", n, "Seed postings");
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--kind", kind, "Ranker kind")
        ->check(CLI::IsMember({"linear", "gbdt"}));
    cmd->add_option("--out-dir", out_dir, "Models directory")->required();
  }

  int Run(std::ostream &out) const {
    data.Validate(true, true);
    fs::path dir(out_dir);
    for (EntityType type : kAllEntityTypes) {
      if (LatestVersion(RankerDir(dir, type)) > 0) {
        throw UsageError(out_dir + " already holds models");
      }
    }
    auto taxonomy = data.LoadTaxonomyFile();
    auto embeddings = data.LoadEmbeddingFile();
    SeedData seed_data = GenerateSeedData(
        taxonomy, embeddings, LoadTemplates(data.TemplatesPath()), n, seed);

    fs::create_directories(dir / "seed");
    {
      Output examples((dir / "seed" / "examples.jsonl").string(), out);
      WriteExamples(seed_data.examples, examples.stream());
      examples.Close();
      Output sentences((dir / "seed" / "sentences.jsonl").string(), out);
      for (const LabeledSentence &s : seed_data.sentences) {
        WriteJsonLine(sentences.stream(), ToJson(s));
      }
      sentences.Close();
    }

    RetrainConfig config;
    config.kind = kind == "linear" ? ModelKindOption::kLinear
                                   : ModelKindOption::kGbdt;
    for (EntityType type : kAllEntityTypes) {
      std::vector<TrainingExample> examples = OfType(seed_data.examples, type);
      ModelArtifact artifact;
      artifact.entity_type = type;
      std::visit([&](auto &&m) { artifact.model = std::move(m); },
                 TrainRanker(examples, config));
      fs::path path = VersionPath(RankerDir(dir, type), 1);
      SaveModel(artifact, path);
      out << "wrote " << path.string() << " (" << examples.size()
          << " examples)\n";
    }
    ModelArtifact classifier;
    classifier.model = TrainQuestionModel(seed_data.sentences,
                                          QuestionIds(*taxonomy), *embeddings)
                           .model;
    fs::path path = VersionPath(ClassifierDir(dir), 1);
    SaveModel(classifier, path);
    out << "wrote " << path.string() << " (" << seed_data.sentences.size()
        << " sentences)\n";
    return kExitOk;
  }
};

// serve ---------------------------------------------------------------------

struct ServeCommand {
  std::string config;
  std::string host = "127.0.0.1";
  int port = 8080;

  void Register(CLI::App *parent) {
    CLI::App *cmd =
        parent->add_subcommand("serve", "Serve the HTTP JSON API");
    cmd->add_option("--config", config, "Service configuration JSON")
        ->required();
    cmd->add_option("--host", host, "Address to bind");
    cmd->add_option("--port", port, "Port to bind (0: any free port)")
        ->check(CLI::Range(0, 65535));
  }

  int Run(std::ostream &out) const {
    RequireFile(config, "--config");
    ServiceConfig cfg = LoadServiceConfig(config);
    ModelRegistry registry(LoadServingState(cfg), cfg.models_dir);
    JobApi api(registry, cfg);
    HttpServer server(api);

    // Block the stop signals before the server starts its worker threads so
    // that only the waiter below receives them.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    sigaddset(&signals, SIGUSR1);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);
    std::thread waiter([&] {
      int received = 0;
      sigwait(&signals, &received);
      server.Stop();
    });

    int bound = server.Bind(host, port);
    out << "listening on " << host << ":" << bound << std::endl;
    spdlog::info("serving {} on {}:{}", config, host, bound);
    server.Listen();
    pthread_kill(waiter.native_handle(), SIGUSR1);
    waiter.join();
    return kExitOk;
  }
};

// stream --------------------------------------------------------------------

struct StreamCommand {
  std::string config;
  std::string in_path;
  std::string out_path;
  StreamOptions options;

  void Register(CLI::App *parent) {
    CLI::App *cmd = parent->add_subcommand(
        "stream", "Standardize a JSON Lines file of postings in batch");
    cmd->add_option("--config", config, "Service configuration JSON")
        ->required();
    cmd->add_option("--in", in_path, "Postings JSON Lines")->required();
    cmd->add_option("--out", out_path, "Output JSON Lines")->required();
    cmd->add_option("--threads", options.threads,
                    "Worker threads (0: one per core)");
    cmd->add_option("--batch", options.batch_size, "Postings per batch")
        ->check(CLI::PositiveNumber);
  }

  int Run(std::ostream &out, std::ostream &err) const {
    RequireFile(config, "--config");
    RequireFile(in_path, "--in");
    ServiceConfig cfg = LoadServiceConfig(config);
    std::shared_ptr<const ServingState> state = LoadServingState(cfg);
    std::ifstream in(in_path, std::ios::binary);
    Output output(out_path, out);
    auto start = std::chrono::steady_clock::now();
    StreamSummary summary =
        StreamProcess(*state, cfg, in, output.stream(), options);
    output.Close();
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    for (const StreamFailure &f : summary.failures) {
      err << "jobstd: skipped line " << f.line << ": " << f.reason << '\n';
    }
    out << "processed " << summary.processed << " postings, "
        << summary.failures.size() << " failures, " << Fixed(seconds)
        << " s\n";
    return kExitOk;
  }
};

void ConfigureLogging(bool verbose) {
  std::shared_ptr<spdlog::logger> logger = spdlog::get("jobstd");
  if (logger == nullptr) {
    logger = spdlog::stderr_color_mt("jobstd");
    spdlog::set_default_logger(logger);
  }
  spdlog::set_level(verbose ? spdlog::level::info : spdlog::level::warn);
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"jobstd: job posting standardization toolkit", "jobstd"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log progress to stderr");

  TaxonomyValidateCommand taxonomy;
  TagCommand tag;
  FeaturesCommand features;
  GenerateCommand generate;
  BootstrapCommand bootstrap;
  TrainCommand train;
  EvaluateCommand evaluate;
  FeedbackStatsCommand feedback;
  RetrainCommand retrain;
  SimulateCommand simulate;
  ServeCommand serve;
  StreamCommand stream;
  taxonomy.Register(&app);
  tag.Register(&app);
  features.Register(&app);
  generate.Register(&app);
  bootstrap.Register(&app);
  train.Register(&app);
  evaluate.Register(&app);
  feedback.Register(&app);
  retrain.Register(&app);
  simulate.Register(&app);
  serve.Register(&app);
  stream.Register(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "jobstd: usage: " << e.what() << '\n'
        << "Run with --help for more information.\n";
    return kExitUsage;
  }
  ConfigureLogging(verbose);

  std::function<int()> action;
  auto chosen = [&](std::initializer_list<const char *> path) {
    const CLI::App *cmd = &app;
    for (const char *name : path) {
      cmd = cmd->get_subcommand(name);
      if (!cmd->parsed()) return false;
    }
    return true;
  };
  if (chosen({"taxonomy", "validate"})) {
    action = [&] { return taxonomy.Run(out); };
  } else if (chosen({"tag"})) {
    action = [&] { return tag.Run(out); };
  } else if (chosen({"features"})) {
    action = [&] { return features.Run(out); };
  } else if (chosen({"generate"})) {
    action = [&] { return generate.Run(out); };
  } else if (chosen({"bootstrap"})) {
    action = [&] { return bootstrap.Run(out); };
  } else if (chosen({"train"})) {
    action = [&] { return train.Run(out); };
  } else if (chosen({"evaluate"})) {
    action = [&] { return evaluate.Run(out); };
  } else if (chosen({"feedback", "stats"})) {
    action = [&] { return feedback.Run(out); };
  } else if (chosen({"retrain"})) {
    action = [&] { return retrain.Run(out); };
  } else if (chosen({"simulate-feedback"})) {
    action = [&] { return simulate.Run(out); };
  } else if (chosen({"serve"})) {
    action = [&] { return serve.Run(out); };
  } else if (chosen({"stream"})) {
    action = [&] { return stream.Run(out, err); };
  } else {
    err << "jobstd: usage: no command\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError &e) {
    err << "jobstd: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "jobstd: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err << "jobstd: error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace jobstd
