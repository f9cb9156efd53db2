/* Copyright 2026 The hod Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hod/io.hpp"
#include "hod/types.hpp"

namespace hod {

enum class MatchOutcome { TruePositive, FalsePositive, Ignored };

std::string_view to_string(MatchOutcome m);

struct Tally {
  std::size_t tp{0};
  std::size_t fp{0};
  std::size_t fn{0};
  std::size_t ignored{0};

  Tally& operator+=(const Tally& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    ignored += o.ignored;
    return *this;
  }
  friend bool operator==(const Tally&, const Tally&) = default;
};

struct MatchResult : Tally {
  std::vector<MatchOutcome> outcomes;  // parallel to the input detections
};

/// Two-tier greedy matching for one image. Detections are visited by
/// descending score (stable). Each takes the unmatched same-class handheld
/// annotation of highest IoU >= iou_thr (TP); failing that, the unmatched
/// same-class other annotation of highest IoU >= iou_thr (ignored);
/// otherwise it is a FP. Unmatched handheld annotations are FNs.
MatchResult match_image(std::span<const Detection> dets,
                        std::span<const io::CocoAnnotation> handheld,
                        std::span<const io::CocoAnnotation> other, double iou_thr);

/// Pooled tally over the whole set, using detections with score >= min_score.
/// Detections on images outside the set are a ValidationError.
Tally evaluate_at(std::span<const Detection> dets, const io::EvalSet& set, double iou_thr,
                  double min_score);

struct PRPoint {
  double confidence{0.0};
  Tally counts;
  double precision{1.0};  // 1 when nothing is predicted
  double recall{0.0};     // 0 when there is nothing to find
};

PRPoint make_point(double confidence, const Tally& t);

struct SweepResult {
  std::vector<PRPoint> points;  // ascending confidence
  double ap{0.0};
};

/// Confidence thresholds 0, step, 2*step, ..., 1. `step` must divide 1.
std::vector<double> sweep_thresholds(double step);

SweepResult sweep(std::span<const Detection> dets, const io::EvalSet& set,
                  double iou_thr = 0.5, double step = 0.05);

/// Area under the monotone precision envelope of the PR points, integrated
/// over recall from 0.
double average_precision(std::span<const PRPoint> points);

struct FilteredRatios {
  double base_conf{0.001};
  Tally baseline;
  Tally pipeline;
  double tp_filtered{0.0};
  double fp_filtered{0.0};
  bool tp_undefined{false};  // baseline had no TPs
  bool fp_undefined{false};  // baseline had no FPs
};

/// Fractions of baseline TPs and FPs that the pipeline output no longer
/// contains, at `base_conf`. Pipeline detections on images the baseline does
/// not cover are a ValidationError.
FilteredRatios filtered_ratios(std::span<const Detection> baseline,
                               std::span<const Detection> pipeline, const io::EvalSet& set,
                               double iou_thr = 0.5, double base_conf = 0.001);

}  // namespace hod
