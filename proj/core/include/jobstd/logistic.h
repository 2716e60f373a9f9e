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

#ifndef JOBSTD_LOGISTIC_H_
#define JOBSTD_LOGISTIC_H_

#include <span>

#include "jobstd/feature_vector.h"

namespace jobstd {

// Logistic function clamped to the open interval (0, 1), so scores never
// saturate to exactly 0 or 1.
double Sigmoid(double margin);

// Numerically stable -log p(label | margin) for label in {0, 1}.
double LogisticLoss(double margin, int label);

// Throws Error(kDegenerateData) if `data` is empty or lacks either label.
void RequireBothLabels(std::span<const TrainingExample> data);

}  // namespace jobstd

#endif  // JOBSTD_LOGISTIC_H_
