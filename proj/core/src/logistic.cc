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

#include "jobstd/logistic.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jobstd/error.h"

namespace jobstd {
namespace {

double Softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

}  // namespace

double Sigmoid(double margin) {
  double p = margin >= 0 ? 1.0 / (1.0 + std::exp(-margin))
                         : std::exp(margin) / (1.0 + std::exp(margin));
  constexpr double kLow = std::numeric_limits<double>::min();
  const double kHigh = std::nextafter(1.0, 0.0);
  return std::clamp(p, kLow, kHigh);
}

double LogisticLoss(double margin, int label) {
  return label == 1 ? Softplus(-margin) : Softplus(margin);
}

void RequireBothLabels(std::span<const TrainingExample> data) {
  bool positive = false;
  bool negative = false;
  for (const TrainingExample &ex : data) {
    if (ex.label != 0 && ex.label != 1) {
      throw Error(ErrorCode::kInvalidArgument, "labels must be 0 or 1");
    }
    if (!(ex.weight > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
    }
    (ex.label == 1 ? positive : negative) = true;
  }
  if (!positive || !negative) {
    throw Error(ErrorCode::kDegenerateData,
                data.empty() ? "no training examples"
                             : "training data contains a single label class");
  }
}

}  // namespace jobstd
