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

#include <cstddef>
#include <string>
#include <vector>

#include "rmopp/errors.hpp"

namespace rmopp {

// Axis-aligned box in corner form (x1, y1, x2, y2), x1 < x2 and y1 < y2.
// COCO-style (x, y, w, h) inputs are converted at ingestion so that all
// downstream code shares one convention.
struct Box {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  bool valid() const { return x2 > x1 && y2 > y1; }

  bool operator==(const Box&) const = default;
};

using ClassProbVector = std::vector<double>;

// One candidate box from a detector: full class-probability vector plus the
// box confidence. Detectors that emit no confidence default it to 1.
struct Detection {
  std::string image_id;
  Box bbox;
  ClassProbVector class_probs;
  double objectness = 1.0;

  bool operator==(const Detection&) const = default;
};

// Top-2 slice of the descending-ordered class probabilities.
struct OrderedClassStats {
  int top_class = 0;
  double p1 = 0.0;
  double p2 = 0.0;
};

struct GroundTruthBox {
  std::string image_id;
  int class_index = 0;
  Box bbox;

  bool operator==(const GroundTruthBox&) const = default;
};

struct ImageData {
  std::string image_id;
  std::vector<Detection> detections;
  std::vector<GroundTruthBox> ground_truth;

  bool operator==(const ImageData&) const = default;
};

// Detections and annotations grouped per image. Image order is
// first-appearance order and every operation preserves it, so results are
// reproducible for a given pair of input files.
struct Dataset {
  std::vector<ImageData> images;
  int num_classes = 0;

  std::size_t total_detections() const;
  std::size_t total_ground_truth() const;

  bool operator==(const Dataset&) const = default;
};

// Probability sums drift when vectors are serialized at low float
// precision; anything inside this tolerance is accepted.
inline constexpr double kProbSumTolerance = 1e-4;

// p1 = largest element, p2 = second largest with multiplicity (two equal
// maxima give p2 == p1), top_class = index of the maximum with ties broken
// by the lowest index. Throws ValidationError for vectors shorter than 2.
OrderedClassStats ordered_stats(const ClassProbVector& probs);
OrderedClassStats ordered_stats(const Detection& det);

// Returns a dataset satisfying every type invariant, or throws
// ValidationError naming the image id and record index of the offending
// record. With renormalize set, probability vectors with positive sum are
// divided by their sum before the range checks.
Dataset validate_dataset(const Dataset& raw, bool renormalize = false);

}  // namespace rmopp
