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

#ifndef JOBSTD_QUESTION_H_
#define JOBSTD_QUESTION_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jobstd/embedding.h"
#include "jobstd/features.h"
#include "jobstd/ranker.h"
#include "jobstd/tagger.h"

namespace jobstd {

// Class id of sentences that ask for no assessment question.
inline constexpr std::string_view kNoneClass = "NONE";

// Softmax classifier over encoded sentences. The encoder projection is part
// of the model because it is trained jointly with the class weights.
struct QuestionModel {
  std::vector<std::string> classes;  // sorted; includes kNoneClass
  std::vector<Vector> weights;       // one length-d row per class
  Vector bias;                       // one entry per class
  Projection projection;
  bool trained = false;

  size_t dimension() const { return projection.dimension(); }
  bool operator==(const QuestionModel &) const = default;
};

struct Classification {
  std::string class_id;
  double probability = 0.0;
};

class QuestionClassifier {
 public:
  QuestionClassifier(QuestionModel model,
                     std::shared_ptr<const EmbeddingTable> table);

  const QuestionModel &model() const { return model_; }
  const SentenceEncoder &encoder() const { return encoder_; }

  // Class probabilities in model().classes order. Throws Error(kUntrained).
  std::vector<double> Probabilities(std::string_view sentence) const;
  std::vector<double> Probabilities(const Encoding &encoding) const;

  // Most probable class; ties go to the lexicographically first class.
  // Throws Error(kUntrained).
  Classification Classify(std::string_view sentence) const;

 private:
  QuestionModel model_;
  SentenceEncoder encoder_;
};

inline Classification ClassifySentence(const QuestionClassifier &classifier,
                                       std::string_view sentence) {
  return classifier.Classify(sentence);
}

struct LabeledSentence {
  std::string text;
  std::string label;  // question type id or kNoneClass

  bool operator==(const LabeledSentence &) const = default;
};

struct QuestionTrainOptions {
  int epochs = 1000;
  double learning_rate = 2.0;
  double l2 = 1e-4;
  // When false the projection stays the identity.
  bool train_projection = true;
};

struct QuestionTrainResult {
  QuestionModel model;
  std::vector<double> loss_history;
};

// Multinomial logistic regression on z = normalize(tanh(W x + b)), where x
// is the mean word vector of the sentence, trained by full-batch gradient
// descent on the mean cross-entropy plus (l2 / 2) |U|^2. W starts at the
// identity, every other parameter at zero. Like the other trainers, a step
// that would raise the objective is halved until it does not. `classes`
// lists every class the model may output; kNoneClass is always added.
// Throws Error(kDegenerateData) on an empty set and Error(kInvalidArgument)
// on a label outside `classes`.
QuestionTrainResult TrainQuestionModel(std::span<const LabeledSentence> data,
                                       std::vector<std::string> classes,
                                       const EmbeddingTable &table,
                                       const QuestionTrainOptions &options = {});

// Question-type candidates of a posting: each description sentence whose
// class is not kNoneClass becomes an occurrence of that type. The surface
// is the first such sentence. Ordered by question id.
std::vector<Candidate> QuestionCandidates(const JobPosting &posting,
                                          const QuestionClassifier &classifier);

// Sentence classification, feature extraction and ranking; at most k
// suggestions. When `scored` is non-null it receives every ranked
// candidate with its features.
std::vector<RankedSuggestion> SuggestQuestions(
    const JobPosting &posting, const QuestionClassifier &classifier,
    const FeatureExtractor &extractor, const RankModel &model, size_t k = 3,
    std::vector<ScoredCandidate> *scored = nullptr);

}  // namespace jobstd

#endif  // JOBSTD_QUESTION_H_
