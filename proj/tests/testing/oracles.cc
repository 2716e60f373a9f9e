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

#include "oracles.h"

#include <algorithm>
#include <cmath>

#include "jobstd/logistic.h"
#include "jobstd/text.h"

namespace jobstd::testing {

namespace {

std::vector<std::string> SplitOnSpace(const std::string &key) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= key.size()) {
    size_t end = key.find(' ', start);
    if (end == std::string::npos) end = key.size();
    if (end > start) out.push_back(key.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

double WalkNode(const RegressionTree &tree, int32_t i, const FeatureVector &x) {
  const TreeNode &node = tree.nodes[i];
  if (node.feature < 0) return node.value;
  return x.values[node.feature] < node.threshold
             ? WalkNode(tree, node.left, x)
             : WalkNode(tree, node.right, x);
}

}  // namespace

std::vector<MentionTuple> NaiveTag(const Taxonomy &taxonomy, EntityType type,
                                   const JobPosting &posting) {
  std::vector<MentionTuple> out;
  for (Field field : {Field::kTitle, Field::kDescription, Field::kCompany}) {
    const std::string &text = FieldText(posting, field);
    NormalizedText norm = Normalize(text);
    for (const TaxonomyEntity *entity : taxonomy.OfType(type)) {
      for (const std::string &alias : entity->NormalizedAliases()) {
        std::vector<std::string> pattern = SplitOnSpace(alias);
        if (pattern.empty() || pattern.size() > norm.tokens.size()) continue;
        for (size_t i = 0; i + pattern.size() <= norm.tokens.size(); ++i) {
          bool equal = true;
          for (size_t j = 0; j < pattern.size() && equal; ++j) {
            equal = norm.tokens[i + j] == pattern[j];
          }
          if (!equal) continue;
          size_t begin = norm.spans[i].begin;
          size_t end = norm.spans[i + pattern.size() - 1].end;
          out.emplace_back(entity->id, field, begin, end,
                           text.substr(begin, end - begin));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MentionTuple> ToTuples(std::span<const EntityMention> mentions) {
  std::vector<MentionTuple> out;
  for (const EntityMention &m : mentions) {
    out.emplace_back(m.entity_id, m.field, m.char_span.begin, m.char_span.end,
                     m.surface);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> BruteForceTitleCandidates(const Taxonomy &taxonomy,
                                                   std::string_view raw_title) {
  std::vector<std::string> raw_tokens = Normalize(raw_title).tokens;
  std::vector<std::string> out;
  for (const TaxonomyEntity *entity : taxonomy.OfType(EntityType::kTitle)) {
    bool hit = false;
    for (const std::string &alias : entity->aliases) {
      for (const std::string &a : Normalize(alias).tokens) {
        for (const std::string &r : raw_tokens) hit = hit || a == r;
      }
    }
    if (hit) out.push_back(entity->id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double PmiFormula(double pair, double x, double y, double total,
                  double distinct_pairs, double alpha) {
  double root_v = std::sqrt(distinct_pairs);
  return std::log(pair + alpha) + std::log(total + alpha * distinct_pairs) -
         std::log(x + alpha * root_v) - std::log(y + alpha * root_v);
}

double AcceptanceFormula(double accepted, double shown) {
  return (accepted + 1.0) / (shown + 2.0);
}

std::array<double, kFeatureCount + 1> FiniteDifferenceGradient(
    std::span<const TrainingExample> data, const LinearModel &model, double l2,
    double epsilon) {
  std::array<double, kFeatureCount + 1> out{};
  for (size_t i = 0; i <= kFeatureCount; ++i) {
    LinearModel plus = model;
    LinearModel minus = model;
    double &p = i < kFeatureCount ? plus.weights[i] : plus.bias;
    double &m = i < kFeatureCount ? minus.weights[i] : minus.bias;
    p += epsilon;
    m -= epsilon;
    out[i] = (EvaluateLinearObjective(data, plus, l2).loss -
              EvaluateLinearObjective(data, minus, l2).loss) /
             (2.0 * epsilon);
  }
  return out;
}

double TreeWalkMargin(const GbdtModel &model, const FeatureVector &x) {
  double sum = 0.0;
  for (const RegressionTree &tree : model.trees) {
    if (!tree.nodes.empty()) sum += WalkNode(tree, 0, x);
  }
  return model.base_score + model.learning_rate * sum;
}

std::vector<RankedSuggestion> SortThenTruncate(
    std::vector<std::pair<EntityKey, double>> scored, size_t k) {
  std::stable_sort(scored.begin(), scored.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first.id < b.first.id;
  });
  std::vector<RankedSuggestion> out;
  for (size_t i = 0; i < scored.size() && i < k; ++i) {
    out.push_back({scored[i].first.type, scored[i].first.id, scored[i].second,
                   static_cast<int>(i + 1)});
  }
  return out;
}

double ConstantBaselineLoss(std::span<const TrainingExample> data) {
  double positive = 0.0;
  double total = 0.0;
  for (const TrainingExample &ex : data) {
    positive += ex.weight * ex.label;
    total += ex.weight;
  }
  double p = positive / total;
  double loss = 0.0;
  for (const TrainingExample &ex : data) {
    loss -= ex.weight * (ex.label * std::log(p) + (1 - ex.label) * std::log(1 - p));
  }
  return loss / total;
}

}  // namespace jobstd::testing
