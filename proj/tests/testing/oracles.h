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

// Reference implementations used as test oracles. Each one follows the
// definition of the quantity as directly as possible, with no indexes or
// shortcuts, so that agreement with the production code is meaningful.

#ifndef JOBSTD_TESTS_TESTING_ORACLES_H_
#define JOBSTD_TESTS_TESTING_ORACLES_H_

#include <array>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "jobstd/entity_type.h"
#include "jobstd/feature_vector.h"
#include "jobstd/gbdt.h"
#include "jobstd/linear_model.h"
#include "jobstd/ranker.h"
#include "jobstd/tagger.h"
#include "jobstd/taxonomy.h"

namespace jobstd::testing {

// (entity id, field, char begin, char end, surface)
using MentionTuple =
    std::tuple<std::string, Field, size_t, size_t, std::string>;

// Slides every normalized alias of every entity of `type` over every field's
// token sequence and reports each window that equals it. Sorted.
std::vector<MentionTuple> NaiveTag(const Taxonomy &taxonomy, EntityType type,
                                   const JobPosting &posting);

// The same tuples from tagger output, sorted.
std::vector<MentionTuple> ToTuples(std::span<const EntityMention> mentions);

// Title ids sharing at least one token between any alias and the raw title,
// found by comparing every pair of tokens. Sorted.
std::vector<std::string> BruteForceTitleCandidates(const Taxonomy &taxonomy,
                                                   std::string_view raw_title);

// log((c_xy + a)(N + aV) / ((c_x + a sqrt V)(c_y + a sqrt V))), written as a
// sum of logarithms.
double PmiFormula(double pair, double x, double y, double total,
                  double distinct_pairs, double alpha);
// (accepted + 1) / (shown + 2)
double AcceptanceFormula(double accepted, double shown);

// Central differences of the linear objective in every parameter
// (weights, then bias).
std::array<double, kFeatureCount + 1> FiniteDifferenceGradient(
    std::span<const TrainingExample> data, const LinearModel &model, double l2,
    double epsilon);

// Recursive walk from the root of each tree, summed in order.
double TreeWalkMargin(const GbdtModel &model, const FeatureVector &x);

// Full sort by (score desc, id asc), then truncation to k.
std::vector<RankedSuggestion> SortThenTruncate(
    std::vector<std::pair<EntityKey, double>> scored, size_t k);

// Mean weighted log-loss of the best constant prediction.
double ConstantBaselineLoss(std::span<const TrainingExample> data);

}  // namespace jobstd::testing

#endif  // JOBSTD_TESTS_TESTING_ORACLES_H_
