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

#include "jobstd/question.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "jobstd/error.h"
#include "jobstd/text.h"

namespace jobstd {

QuestionClassifier::QuestionClassifier(
    QuestionModel model, std::shared_ptr<const EmbeddingTable> table)
    : model_(std::move(model)),
      encoder_(std::move(table),
               model_.projection.dimension() > 0
                   ? std::optional<Projection>(model_.projection)
                   : std::nullopt) {
  size_t d = encoder_.dimension();
  if (model_.weights.size() != model_.classes.size() ||
      model_.bias.size() != model_.classes.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "question model class/weight count mismatch");
  }
  for (const Vector &row : model_.weights) {
    if (row.size() != d) {
      throw Error(ErrorCode::kInvalidArgument,
                  "question model dimension does not match embeddings");
    }
  }
  if (model_.projection.dimension() != 0 &&
      (model_.projection.dimension() != d ||
       model_.projection.weights.size() != d * d)) {
    throw Error(ErrorCode::kInvalidArgument,
                "question projection dimension does not match embeddings");
  }
}

std::vector<double> QuestionClassifier::Probabilities(
    const Encoding &encoding) const {
  if (!model_.trained || model_.classes.empty()) {
    throw Error(ErrorCode::kUntrained, "question classifier is not trained");
  }
  size_t n = model_.classes.size();
  std::vector<double> p(n);
  double top = -INFINITY;
  for (size_t c = 0; c < n; ++c) {
    p[c] = Dot(model_.weights[c], encoding.vector) + model_.bias[c];
    top = std::max(top, p[c]);
  }
  double sum = 0.0;
  for (double &v : p) {
    v = std::exp(v - top);
    sum += v;
  }
  for (double &v : p) v /= sum;
  return p;
}

std::vector<double> QuestionClassifier::Probabilities(
    std::string_view sentence) const {
  return Probabilities(encoder_.Encode(sentence));
}

Classification QuestionClassifier::Classify(std::string_view sentence) const {
  std::vector<double> p = Probabilities(sentence);
  size_t best = 0;
  for (size_t c = 1; c < p.size(); ++c) {
    if (p[c] > p[best]) best = c;
  }
  return {model_.classes[best], p[best]};
}

namespace {

// Flattened parameters: U (C x d), c (C), W (d x d), b (d).
struct Params {
  size_t classes = 0;
  size_t dim = 0;
  std::vector<double> theta;

  Params(size_t c, size_t d) : classes(c), dim(d), theta(c * d + c + d * d + d) {}
  double *u() { return theta.data(); }
  double *c() { return u() + classes * dim; }
  double *w() { return c() + classes; }
  double *b() { return w() + dim * dim; }
  const double *u() const { return theta.data(); }
  const double *c() const { return u() + classes * dim; }
  const double *w() const { return c() + classes; }
  const double *b() const { return w() + dim * dim; }
};

struct Example {
  Vector mean;
  bool any_token = false;
  size_t label = 0;
};

// Mean cross-entropy plus (l2 / 2) |U|^2 and, when `grad` is non-null, its
// gradient with respect to theta.
double Objective(const Params &p, std::span<const Example> data, double l2,
                 bool train_projection, std::vector<double> *grad) {
  const size_t n_classes = p.classes;
  const size_t d = p.dim;
  if (grad != nullptr) grad->assign(p.theta.size(), 0.0);
  const double scale = 1.0 / static_cast<double>(data.size());
  double loss = 0.0;
  Vector h(d), z(d), logits(n_classes), dz(d);
  for (const Example &ex : data) {
    double norm = 0.0;
    if (ex.any_token) {
      for (size_t i = 0; i < d; ++i) {
        double a = p.b()[i];
        const double *row = p.w() + i * d;
        for (size_t j = 0; j < d; ++j) a += row[j] * ex.mean[j];
        h[i] = std::tanh(a);
      }
      norm = Norm(h);
    }
    if (norm > 0.0) {
      for (size_t i = 0; i < d; ++i) z[i] = h[i] / norm;
    } else {
      std::fill(z.begin(), z.end(), 0.0);
    }
    double top = -INFINITY;
    for (size_t c = 0; c < n_classes; ++c) {
      logits[c] = p.c()[c];
      const double *row = p.u() + c * d;
      for (size_t i = 0; i < d; ++i) logits[c] += row[i] * z[i];
      top = std::max(top, logits[c]);
    }
    double sum = 0.0;
    for (size_t c = 0; c < n_classes; ++c) sum += std::exp(logits[c] - top);
    double log_norm = top + std::log(sum);
    loss += scale * (log_norm - logits[ex.label]);
    if (grad == nullptr) continue;

    double *gu = grad->data();
    double *gc = gu + n_classes * d;
    double *gw = gc + n_classes;
    double *gb = gw + d * d;
    std::fill(dz.begin(), dz.end(), 0.0);
    for (size_t c = 0; c < n_classes; ++c) {
      double dl = std::exp(logits[c] - log_norm) - (c == ex.label ? 1.0 : 0.0);
      dl *= scale;
      gc[c] += dl;
      const double *row = p.u() + c * d;
      for (size_t i = 0; i < d; ++i) {
        gu[c * d + i] += dl * z[i];
        dz[i] += dl * row[i];
      }
    }
    if (!train_projection || norm == 0.0) continue;
    double z_dz = Dot(z, dz);
    for (size_t i = 0; i < d; ++i) {
      double dh = (dz[i] - z[i] * z_dz) / norm;
      double da = dh * (1.0 - h[i] * h[i]);
      gb[i] += da;
      for (size_t j = 0; j < d; ++j) gw[i * d + j] += da * ex.mean[j];
    }
  }
  for (size_t k = 0; k < n_classes * d; ++k) {
    loss += 0.5 * l2 * p.theta[k] * p.theta[k];
    if (grad != nullptr) (*grad)[k] += l2 * p.theta[k];
  }
  return loss;
}

}  // namespace

QuestionTrainResult TrainQuestionModel(std::span<const LabeledSentence> data,
                                       std::vector<std::string> classes,
                                       const EmbeddingTable &table,
                                       const QuestionTrainOptions &options) {
  if (data.empty()) {
    throw Error(ErrorCode::kDegenerateData, "no labeled sentences");
  }
  classes.emplace_back(kNoneClass);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::map<std::string, size_t, std::less<>> class_index;
  for (size_t c = 0; c < classes.size(); ++c) class_index[classes[c]] = c;

  const size_t d = table.dimension();
  SentenceEncoder plain(std::make_shared<EmbeddingTable>(table));
  std::vector<Example> examples;
  examples.reserve(data.size());
  for (const LabeledSentence &s : data) {
    auto it = class_index.find(s.label);
    if (it == class_index.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown question label '" + s.label + "'");
    }
    Example ex;
    size_t found = 0;
    ex.mean = plain.Mean(Normalize(s.text).tokens, &found);
    ex.any_token = found > 0;
    ex.label = it->second;
    examples.push_back(std::move(ex));
  }

  Params params(classes.size(), d);
  for (size_t i = 0; i < d; ++i) params.w()[i * d + i] = 1.0;

  QuestionTrainResult result;
  std::vector<double> grad;
  double loss = Objective(params, examples, options.l2,
                          options.train_projection, &grad);
  result.loss_history.push_back(loss);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    double step = options.learning_rate;
    bool accepted = false;
    Params next = params;
    double next_loss = loss;
    for (int attempt = 0; attempt < 40; ++attempt) {
      next = params;
      for (size_t k = 0; k < next.theta.size(); ++k) {
        next.theta[k] -= step * grad[k];
      }
      next_loss = Objective(next, examples, options.l2,
                            options.train_projection, nullptr);
      if (next_loss <= loss) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (accepted) {
      params = std::move(next);
      loss = Objective(params, examples, options.l2, options.train_projection,
                       &grad);
    }
    result.loss_history.push_back(loss);
  }

  QuestionModel &model = result.model;
  model.classes = std::move(classes);
  model.weights.assign(model.classes.size(), Vector(d));
  model.bias.assign(model.classes.size(), 0.0);
  for (size_t c = 0; c < model.classes.size(); ++c) {
    std::copy_n(params.u() + c * d, d, model.weights[c].begin());
    model.bias[c] = params.c()[c];
  }
  model.projection.weights.assign(params.w(), params.w() + d * d);
  model.projection.bias.assign(params.b(), params.b() + d);
  model.trained = true;
  return result;
}

std::vector<Candidate> QuestionCandidates(const JobPosting &posting,
                                          const QuestionClassifier &classifier) {
  std::map<std::string, Candidate> by_type;
  for (const Sentence &s : QuestionSentenceCandidates(posting)) {
    Classification c = classifier.Classify(s.text);
    if (c.class_id == kNoneClass) continue;
    auto [it, inserted] = by_type.try_emplace(c.class_id);
    if (inserted) {
      it->second.key = {EntityType::kQuestion, c.class_id};
      it->second.surface = s.text;
    }
    it->second.occurrences.push_back({Field::kDescription, s.span});
  }
  std::vector<Candidate> out;
  out.reserve(by_type.size());
  for (auto &[id, candidate] : by_type) out.push_back(std::move(candidate));
  return out;
}

std::vector<RankedSuggestion> SuggestQuestions(
    const JobPosting &posting, const QuestionClassifier &classifier,
    const FeatureExtractor &extractor, const RankModel &model, size_t k,
    std::vector<ScoredCandidate> *scored) {
  std::vector<Candidate> candidates = QuestionCandidates(posting, classifier);
  // Classes absent from the taxonomy cannot be suggested.
  std::erase_if(candidates, [&](const Candidate &c) {
    return extractor.taxonomy().Lookup(c.key) == nullptr;
  });
  PostingContext context(posting, extractor.encoder());
  std::vector<ScoredCandidate> features;
  features.reserve(candidates.size());
  for (const Candidate &c : candidates) {
    features.push_back({c.key, extractor.Extract(context, c, candidates)});
  }
  std::vector<RankedSuggestion> ranked = Rank(model, features, k);
  if (scored != nullptr) *scored = std::move(features);
  return ranked;
}

}  // namespace jobstd
