// Copyright 2026 The RMOPP Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <vector>

#include "rmopp/model.hpp"

namespace rmopp {

// Thresholds of the dual likelihood-ratio filter. gamma1 bounds the
// class ratio p1/p2, gamma2 bounds the detection ratio objectness/p1.
// gamma2 may exceed 1 even though typical sweeps cap it there.
struct FilterThresholds {
  double gamma1 = 1.0;
  double gamma2 = 0.0;

  void validate() const;  // finite and non-negative
};

// Threshold for the classic score filter; bounds a product of two
// probabilities, hence constrained to [0, 1].
struct LegacyThreshold {
  double gamma = 0.0;

  void validate() const;
};

// p1 * objectness, the traditional confidence score.
double legacy_score(const Detection& det);

// Keeps detections whose legacy score is strictly greater than gamma.
// Relative order is preserved.
std::vector<Detection> legacy_filter(const std::vector<Detection>& dets,
                                     LegacyThreshold t);

// p1 / p2. Returns +infinity when p2 == 0, so one-hot classifiers pass any
// finite gamma1.
double llr_class_ratio(const OrderedClassStats& stats);
double llr_class_ratio(const Detection& det);

// objectness / p1. Throws ValidationError when p1 == 0 (validation rejects
// such detections upstream).
double llr_det_ratio(const OrderedClassStats& stats, double objectness);
double llr_det_ratio(const Detection& det);

// True iff llr_class_ratio >= gamma1 and llr_det_ratio >= gamma2. Both
// comparisons are non-strict.
bool passes_rmopp(const OrderedClassStats& stats, double objectness,
                  FilterThresholds t);
bool passes_rmopp(const Detection& det, FilterThresholds t);

// Keeps exactly the detections passing both ratio thresholds; relative
// order is preserved. (gamma1 = 1, gamma2 = 0) keeps every valid detection.
std::vector<Detection> rmopp_filter(const std::vector<Detection>& dets,
                                    FilterThresholds t);

}  // namespace rmopp
