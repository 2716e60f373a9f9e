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

#include "jobstd/synth.h"

#include <algorithm>
#include <fstream>

#include "jobstd/error.h"
#include "jobstd/metrics.h"
#include "jobstd/pipeline.h"

namespace jobstd {

namespace {

std::vector<std::string> StringList(const Json &json, const char *name) {
  if (!json.contains(name)) return {};
  const Json &v = json[name];
  if (!v.is_array()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("templates: '") + name + "' must be a list");
  }
  std::vector<std::string> out;
  for (const Json &s : v) out.push_back(s.get<std::string>());
  return out;
}

std::map<std::string, std::vector<std::string>> StringListMap(const Json &json,
                                                              const char *name) {
  std::map<std::string, std::vector<std::string>> out;
  if (!json.contains(name)) return out;
  for (const auto &[key, value] : json[name].items()) {
    for (const Json &s : value) out[key].push_back(s.get<std::string>());
  }
  return out;
}

void ReplaceAll(std::string &text, std::string_view from, std::string_view to) {
  for (size_t pos = text.find(from); pos != std::string::npos;
       pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
}

template <typename T>
const T &PickOr(Rng &rng, const std::vector<T> &items, const T &fallback) {
  return items.empty() ? fallback : rng.Pick(items);
}

std::string Alias(Rng &rng, const TaxonomyEntity &entity) {
  return rng.Pick(entity.aliases);
}

}  // namespace

Templates TemplatesFromJson(const Json &json) {
  if (!json.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "templates must be an object");
  }
  Templates t;
  t.title_prefixes = StringList(json, "title_prefixes");
  t.title_suffixes = StringList(json, "title_suffixes");
  t.locations = StringList(json, "locations");
  t.intro = StringList(json, "intro");
  t.skill_requirement = StringList(json, "skill_requirement");
  t.skill_distractor = StringList(json, "skill_distractor");
  t.company_distractor = StringList(json, "company_distractor");
  t.filler = StringList(json, "filler");
  t.about_us = json.value("about_us", "About us:");
  t.question_requirement = StringListMap(json, "question_requirement");
  t.question_mention = StringListMap(json, "question_mention");
  if (t.intro.empty() || t.skill_requirement.empty() ||
      t.skill_distractor.empty() || t.locations.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "templates need intro, skill_requirement, skill_distractor "
                "and locations");
  }
  return t;
}

Templates LoadTemplates(const std::filesystem::path &path) {
  try {
    return TemplatesFromJson(ReadJsonFile(path));
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument, path.string() + ": " + e.what());
  }
}

// PostingGenerator ------------------------------------------------------------

PostingGenerator::PostingGenerator(std::shared_ptr<const Taxonomy> taxonomy,
                                   const Templates &templates, uint64_t seed)
    : taxonomy_(std::move(taxonomy)), templates_(&templates), rng_(seed) {
  titles_ = taxonomy_->OfType(EntityType::kTitle);
  companies_ = taxonomy_->OfType(EntityType::kCompany);
  skills_ = taxonomy_->OfType(EntityType::kSkill);
  for (const TaxonomyEntity *s : skills_) {
    skills_by_domain_[s->attribute("domain")].push_back(s);
  }
  for (const TaxonomyEntity *q : taxonomy_->OfType(EntityType::kQuestion)) {
    if (templates.question_requirement.contains(q->id)) {
      question_ids_.push_back(q->id);
    }
  }
  if (titles_.empty() || companies_.empty() || skills_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "posting generation needs titles, skills and companies");
  }
}

GeneratedPosting PostingGenerator::Next(const std::string &id_prefix) {
  const Templates &t = *templates_;
  GeneratedPosting out;
  JobPosting &p = out.posting;
  PostingTruth &truth = out.truth;
  p.posting_id = id_prefix + std::to_string(++count_);

  const TaxonomyEntity &title = *rng_.Pick(titles_);
  const TaxonomyEntity &company = *rng_.Pick(companies_);
  truth.title = title.id;
  truth.company = company.id;
  const std::string domain = title.attribute("domain");
  p.industry = title.attribute("industry");

  p.raw_title = Alias(rng_, title);
  if (!t.title_prefixes.empty() && rng_.Bernoulli(0.4)) {
    p.raw_title = rng_.Pick(t.title_prefixes) + " " + p.raw_title;
  }
  if (!t.title_suffixes.empty() && rng_.Bernoulli(0.3)) {
    p.raw_title += " " + rng_.Pick(t.title_suffixes);
  }
  p.location = rng_.Pick(t.locations);
  std::string company_surface = Alias(rng_, company);
  p.company_field = rng_.Bernoulli(0.8) ? company_surface : "";
  std::string email_domain = company.attribute("domain");
  if (!email_domain.empty() && rng_.Bernoulli(0.7)) {
    p.contact_email = "jobs@" + email_domain;
  }

  // Skills: in-domain requirements and out-of-domain distractors.
  std::vector<const TaxonomyEntity *> in_domain = skills_by_domain_[domain];
  if (in_domain.empty()) in_domain = skills_;
  std::vector<const TaxonomyEntity *> positives =
      rng_.Sample(in_domain, static_cast<size_t>(rng_.Between(3, 5)));
  std::vector<const TaxonomyEntity *> others;
  for (const TaxonomyEntity *s : skills_) {
    if (s->attribute("domain") != domain) others.push_back(s);
  }
  std::vector<const TaxonomyEntity *> distractors =
      rng_.Sample(others, static_cast<size_t>(rng_.Between(1, 3)));
  for (const TaxonomyEntity *s : positives) truth.skills.push_back(s->id);
  for (const TaxonomyEntity *s : distractors) {
    truth.distractor_skills.push_back(s->id);
  }

  // Question types: requirements and topic mentions.
  std::vector<std::string> questions;
  if (!question_ids_.empty()) {
    questions = rng_.Sample(question_ids_, static_cast<size_t>(rng_.Between(1, 2)));
  }
  std::string mentioned_question;
  if (question_ids_.size() > questions.size() && rng_.Bernoulli(0.7)) {
    std::vector<std::string> rest;
    for (const std::string &q : question_ids_) {
      if (std::find(questions.begin(), questions.end(), q) == questions.end() &&
          t.question_mention.contains(q)) {
        rest.push_back(q);
      }
    }
    if (!rest.empty()) mentioned_question = rng_.Pick(rest);
  }
  truth.questions = questions;
  if (!mentioned_question.empty()) {
    truth.distractor_questions.push_back(mentioned_question);
  }

  // Assemble the description, remembering where question sentences start.
  std::string &d = p.description;
  std::map<std::string, size_t> question_starts;
  auto add = [&](std::string sentence) {
    if (!d.empty()) d += ' ';
    size_t start = d.size();
    d += sentence;
    return start;
  };
  auto fill = [&](std::string s) {
    ReplaceAll(s, "{title}", title.canonical_name);
    ReplaceAll(s, "{company}", company_surface);
    ReplaceAll(s, "{location}", p.location);
    return s;
  };
  add(fill(rng_.Pick(t.intro)));
  if (!t.filler.empty() && rng_.Bernoulli(0.5)) add(rng_.Pick(t.filler));
  for (size_t i = 0; i < positives.size(); ++i) {
    std::string s = rng_.Pick(t.skill_requirement);
    ReplaceAll(s, "{skill}", Alias(rng_, *positives[i]));
    const TaxonomyEntity &second = *positives[(i + 1) % positives.size()];
    ReplaceAll(s, "{skill2}", Alias(rng_, second));
    add(fill(s));
  }
  for (const std::string &q : questions) {
    question_starts[q] = add(rng_.Pick(t.question_requirement.at(q)));
  }
  if (!t.filler.empty()) add(rng_.Pick(t.filler));
  if (!mentioned_question.empty()) {
    question_starts[mentioned_question] =
        add(rng_.Pick(t.question_mention.at(mentioned_question)));
  }
  if (!t.company_distractor.empty() && companies_.size() > 1 &&
      rng_.Bernoulli(0.5)) {
    const TaxonomyEntity *other = rng_.Pick(companies_);
    if (other->id != company.id) {
      truth.distractor_company = other->id;
      std::string s = rng_.Pick(t.company_distractor);
      ReplaceAll(s, "{company}", Alias(rng_, *other));
      add(s);
    }
  }
  add(t.about_us);
  for (const TaxonomyEntity *s : distractors) {
    std::string sentence = rng_.Pick(t.skill_distractor);
    ReplaceAll(sentence, "{skill}", Alias(rng_, *s));
    add(fill(sentence));
  }

  for (const Sentence &s : SplitSentences(d)) {
    for (const auto &[q, start] : question_starts) {
      if (s.span.begin == start) truth.question_spans[q] = s.span;
    }
  }
  return out;
}

// Labeled sentences -------------------------------------------------------------

std::vector<LabeledSentence> GenerateLabeledSentences(
    const Taxonomy &taxonomy, const Templates &templates, size_t n,
    uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> question_ids;
  for (const TaxonomyEntity *q : taxonomy.OfType(EntityType::kQuestion)) {
    if (templates.question_requirement.contains(q->id)) {
      question_ids.push_back(q->id);
    }
  }
  std::vector<const TaxonomyEntity *> titles = taxonomy.OfType(EntityType::kTitle);
  std::vector<const TaxonomyEntity *> skills = taxonomy.OfType(EntityType::kSkill);
  std::vector<const TaxonomyEntity *> companies =
      taxonomy.OfType(EntityType::kCompany);
  std::vector<std::string> mentions;
  for (const auto &[q, sentences] : templates.question_mention) {
    mentions.insert(mentions.end(), sentences.begin(), sentences.end());
  }
  const std::string empty;
  auto name = [&](const std::vector<const TaxonomyEntity *> &items) {
    return items.empty() ? empty : rng.Pick(items)->canonical_name;
  };

  std::vector<LabeledSentence> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (!question_ids.empty() && rng.Bernoulli(0.5)) {
      const std::string &q = rng.Pick(question_ids);
      out.push_back({rng.Pick(templates.question_requirement.at(q)), q});
      continue;
    }
    std::string s;
    switch (rng.Uniform(6)) {
      case 0:
        s = rng.Pick(templates.intro);
        break;
      case 1:
        s = rng.Pick(templates.skill_requirement);
        break;
      case 2:
        s = rng.Pick(templates.skill_distractor);
        break;
      case 3:
        s = PickOr(rng, templates.company_distractor, templates.about_us);
        break;
      case 4:
        s = PickOr(rng, templates.filler, templates.about_us);
        break;
      default:
        s = PickOr(rng, mentions, templates.about_us);
        break;
    }
    ReplaceAll(s, "{title}", name(titles));
    ReplaceAll(s, "{company}", name(companies));
    ReplaceAll(s, "{location}", PickOr(rng, templates.locations, empty));
    ReplaceAll(s, "{skill}", name(skills));
    ReplaceAll(s, "{skill2}", name(skills));
    out.push_back({std::move(s), std::string(kNoneClass)});
  }
  return out;
}

// Seed data -------------------------------------------------------------------

std::vector<TrainingExample> LabelPosting(const GeneratedPosting &generated,
                                          const CandidateGenerator &generator,
                                          const FeatureExtractor &extractor) {
  const JobPosting &posting = generated.posting;
  const PostingTruth &truth = generated.truth;
  PostingContext context(posting, extractor.encoder());
  std::vector<TrainingExample> out;
  auto emit = [&](EntityType type, std::span<const Candidate> candidates,
                  auto is_positive) {
    for (const ScoredCandidate &c : ExtractAll(context, candidates, extractor)) {
      TrainingExample ex;
      ex.features = c.features;
      ex.label = is_positive(c.key.id) ? 1 : 0;
      ex.source = ExampleSource::kSeed;
      ex.group = posting.posting_id;
      ex.entity_type = type;
      ex.entity_id = c.key.id;
      out.push_back(std::move(ex));
    }
  };
  auto contains = [](const std::vector<std::string> &v, const std::string &id) {
    return std::find(v.begin(), v.end(), id) != v.end();
  };

  emit(EntityType::kTitle, generator.Titles(posting),
       [&](const std::string &id) { return id == truth.title; });
  emit(EntityType::kSkill, generator.Mentioned(EntityType::kSkill, posting),
       [&](const std::string &id) { return contains(truth.skills, id); });
  emit(EntityType::kCompany, generator.Mentioned(EntityType::kCompany, posting),
       [&](const std::string &id) { return id == truth.company; });

  // Question candidates come from the generator's own sentence labels.
  std::vector<Candidate> questions;
  for (const auto &[q, span] : truth.question_spans) {
    if (generator.taxonomy().Lookup(EntityType::kQuestion, q) == nullptr) continue;
    Candidate c;
    c.key = {EntityType::kQuestion, q};
    c.surface = posting.description.substr(span.begin, span.size());
    c.occurrences.push_back({Field::kDescription, span});
    questions.push_back(std::move(c));
  }
  emit(EntityType::kQuestion, questions,
       [&](const std::string &id) { return contains(truth.questions, id); });
  return out;
}

SeedData GenerateSeedData(std::shared_ptr<const Taxonomy> taxonomy,
                          std::shared_ptr<const EmbeddingTable> embeddings,
                          const Templates &templates, size_t n_postings,
                          uint64_t seed) {
  SeedData data;
  if (n_postings == 0) return data;
  CandidateGenerator generator(taxonomy);
  SentenceEncoder encoder(embeddings);
  MarketStats stats;
  FeatureExtractor extractor(*taxonomy, encoder, stats);
  PostingGenerator postings(taxonomy, templates, seed);
  for (size_t i = 0; i < n_postings; ++i) {
    GeneratedPosting g = postings.Next("seed-");
    std::vector<TrainingExample> examples = LabelPosting(g, generator, extractor);
    data.examples.insert(data.examples.end(),
                         std::make_move_iterator(examples.begin()),
                         std::make_move_iterator(examples.end()));
    data.postings.push_back(std::move(g));
  }
  data.sentences = GenerateLabeledSentences(*taxonomy, templates,
                                            std::max<size_t>(400, n_postings),
                                            seed ^ 0x5151515151515151ULL);
  return data;
}

// Personas and simulation -------------------------------------------------------

Persona PersonaFromJson(const Json &json) {
  Persona p;
  p.name = json.value("name", "persona");
  if (json.contains("entity_type")) {
    p.entity_type = EntityTypeFromName(json["entity_type"].get<std::string>());
  }
  if (!json.contains("accept") || !json["accept"].is_array()) {
    throw Error(ErrorCode::kInvalidArgument, "persona needs an 'accept' list");
  }
  for (const Json &id : json["accept"]) p.accept.insert(id.get<std::string>());
  return p;
}

Persona LoadPersona(const std::filesystem::path &path) {
  try {
    return PersonaFromJson(ReadJsonFile(path));
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument, path.string() + ": " + e.what());
  }
}

std::vector<FeedbackEvent> SimulateFeedback(
    std::shared_ptr<const Taxonomy> taxonomy,
    std::shared_ptr<const EmbeddingTable> embeddings,
    const Templates &templates, const RankModel &model, const Persona &persona,
    const SimulationOptions &options) {
  CandidateGenerator generator(taxonomy);
  SentenceEncoder encoder(embeddings);
  PostingGenerator postings(taxonomy, templates, options.seed);
  MarketStats stats;
  std::vector<FeedbackEvent> events;
  for (int round = 0; round < options.rounds; ++round) {
    GeneratedPosting g = postings.Next("sim-");
    FeatureExtractor extractor(*taxonomy, encoder, stats);
    PostingContext context(g.posting, encoder);
    RankedSection section = RankSection(persona.entity_type, context, generator,
                                        extractor, model, options.k);
    std::map<std::string, const FeatureVector *> snapshots;
    for (const ScoredCandidate &c : section.candidates) {
      snapshots[c.key.id] = &c.features;
    }
    const std::string suggestion_id = "sug-" + g.posting.posting_id;
    const int64_t timestamp = options.start_timestamp_ms + round * 1000LL;
    auto event = [&](const RankedSuggestion &s, FeedbackAction action) {
      FeedbackEvent e;
      e.suggestion_id = suggestion_id;
      e.posting_id = g.posting.posting_id;
      e.entity_type = s.entity_type;
      e.entity_id = s.entity_id;
      e.action = action;
      e.event_id = MakeEventId(suggestion_id, s.entity_type, s.entity_id, action);
      e.industry = g.posting.industry;
      const FeatureVector &x = *snapshots.at(s.entity_id);
      e.feature_snapshot.assign(x.values.begin(), x.values.end());
      e.schema_version = x.schema_version;
      e.timestamp_ms = timestamp;
      return e;
    };
    size_t first = events.size();
    for (const RankedSuggestion &s : section.suggestions) {
      events.push_back(event(s, FeedbackAction::kShown));
    }
    for (const RankedSuggestion &s : section.suggestions) {
      events.push_back(event(s, persona.Accepts(s.entity_id)
                                    ? FeedbackAction::kAccepted
                                    : FeedbackAction::kRejected));
    }
    // Same bookkeeping as Aggregate(), applied incrementally.
    for (size_t i = first; i < events.size(); ++i) {
      stats.RecordShown(events[i].key(), events[i].industry);
      if (events[i].action == FeedbackAction::kAccepted) {
        stats.RecordAccepted(events[i].key(), events[i].industry);
      }
    }
  }
  return events;
}

double PersonaMrr(std::span<const GeneratedPosting> postings,
                  const CandidateGenerator &generator,
                  const FeatureExtractor &extractor, const RankModel &model,
                  const Persona &persona) {
  double total = 0.0;
  size_t counted = 0;
  for (const GeneratedPosting &g : postings) {
    PostingContext context(g.posting, extractor.encoder());
    std::vector<Candidate> candidates =
        CandidatesFor(persona.entity_type, g.posting, generator, nullptr);
    if (candidates.empty()) continue;
    std::vector<ScoredCandidate> scored = ExtractAll(context, candidates, extractor);
    std::vector<RankedSuggestion> ranked = Rank(model, scored, scored.size());
    std::vector<bool> relevant;
    for (const RankedSuggestion &s : ranked) {
      relevant.push_back(persona.Accepts(s.entity_id));
    }
    if (std::find(relevant.begin(), relevant.end(), true) == relevant.end()) {
      continue;
    }
    total += ReciprocalRank(relevant);
    ++counted;
  }
  return counted == 0 ? 0.0 : total / static_cast<double>(counted);
}

}  // namespace jobstd
