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
#include "hod/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "hod/error.hpp"

namespace hod {

namespace {

void check_iou_threshold(double iou_thr) {
  if (!(iou_thr > 0.0 && iou_thr <= 1.0)) {
    throw ValidationError("IoU threshold must lie in (0, 1]");
  }
}

/// Index of the unmatched same-class annotation with the highest IoU at or
/// above the threshold; -1 if none.
std::ptrdiff_t best_match(const Detection& det, std::span<const io::CocoAnnotation> anns,
                          const std::vector<bool>& taken, double iou_thr) {
  std::ptrdiff_t best = -1;
  double best_iou = 0.0;
  for (std::size_t i = 0; i < anns.size(); ++i) {
    if (taken[i] || anns[i].class_id != det.class_id) continue;
    const double v = iou(det.bbox, anns[i].bbox);
    if (v >= iou_thr && (best < 0 || v > best_iou)) {
      best = static_cast<std::ptrdiff_t>(i);
      best_iou = v;
    }
  }
  return best;
}

std::map<ImageId, std::vector<Detection>> group_detections(std::span<const Detection> dets,
                                                           const io::EvalSet& set) {
  std::map<ImageId, std::vector<Detection>> groups;
  std::set<ImageId> unknown;
  for (const auto& d : dets) {
    if (!set.find(d.image_id)) unknown.insert(d.image_id);
    groups[d.image_id].push_back(d);
  }
  if (!unknown.empty()) {
    throw ValidationError("detections reference " + std::to_string(unknown.size()) +
                          " image(s) outside the evaluation set, first: " +
                          std::to_string(*unknown.begin()));
  }
  return groups;
}

}  // namespace

std::string_view to_string(MatchOutcome m) {
  switch (m) {
    case MatchOutcome::TruePositive: return "TP";
    case MatchOutcome::FalsePositive: return "FP";
    case MatchOutcome::Ignored: return "ignored";
  }
  return "unknown";
}

MatchResult match_image(std::span<const Detection> dets,
                        std::span<const io::CocoAnnotation> handheld,
                        std::span<const io::CocoAnnotation> other, double iou_thr) {
  check_iou_threshold(iou_thr);
  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dets[a].score > dets[b].score;
  });

  MatchResult r;
  r.outcomes.assign(dets.size(), MatchOutcome::FalsePositive);
  std::vector<bool> handheld_taken(handheld.size(), false);
  std::vector<bool> other_taken(other.size(), false);
  for (const std::size_t i : order) {
    if (const auto h = best_match(dets[i], handheld, handheld_taken, iou_thr); h >= 0) {
      handheld_taken[static_cast<std::size_t>(h)] = true;
      r.outcomes[i] = MatchOutcome::TruePositive;
      ++r.tp;
    } else if (const auto o = best_match(dets[i], other, other_taken, iou_thr); o >= 0) {
      other_taken[static_cast<std::size_t>(o)] = true;
      r.outcomes[i] = MatchOutcome::Ignored;
      ++r.ignored;
    } else {
      ++r.fp;
    }
  }
  r.fn = handheld.size() - r.tp;
  return r;
}

Tally evaluate_at(std::span<const Detection> dets, const io::EvalSet& set, double iou_thr,
                  double min_score) {
  const auto groups = group_detections(dets, set);
  Tally total;
  std::vector<Detection> selected;
  for (const auto& img : set.images) {
    selected.clear();
    if (const auto it = groups.find(img.image.meta.image_id); it != groups.end()) {
      for (const auto& d : it->second) {
        if (d.score >= min_score) selected.push_back(d);
      }
    }
    total += match_image(selected, img.handheld, img.other, iou_thr);
  }
  return total;
}

PRPoint make_point(double confidence, const Tally& t) {
  PRPoint p;
  p.confidence = confidence;
  p.counts = t;
  const std::size_t predicted = t.tp + t.fp;
  const std::size_t actual = t.tp + t.fn;
  p.precision = predicted == 0 ? 1.0 : static_cast<double>(t.tp) / static_cast<double>(predicted);
  p.recall = actual == 0 ? 0.0 : static_cast<double>(t.tp) / static_cast<double>(actual);
  return p;
}

std::vector<double> sweep_thresholds(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw ValidationError("sweep step must lie in (0, 1]");
  const double n_real = std::round(1.0 / step);
  if (std::abs(n_real * step - 1.0) > 1e-9) {
    throw ValidationError("sweep step must divide 1 evenly");
  }
  const auto n = static_cast<int>(n_real);
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(n) + 1);
  // k / n rather than k * step keeps thresholds such as 0.15 exact.
  for (int k = 0; k <= n; ++k) t.push_back(static_cast<double>(k) / n);
  return t;
}

SweepResult sweep(std::span<const Detection> dets, const io::EvalSet& set, double iou_thr,
                  double step) {
  SweepResult r;
  for (const double t : sweep_thresholds(step)) {
    r.points.push_back(make_point(t, evaluate_at(dets, set, iou_thr, t)));
  }
  r.ap = average_precision(r.points);
  return r;
}

double average_precision(std::span<const PRPoint> points) {
  if (points.empty()) throw ValidationError("average precision needs at least one point");
  std::vector<std::pair<double, double>> pr;  // (recall, precision)
  pr.reserve(points.size());
  for (const auto& p : points) pr.emplace_back(p.recall, p.precision);
  std::stable_sort(pr.begin(), pr.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  for (std::size_t i = pr.size() - 1; i > 0; --i) {
    pr[i - 1].second = std::max(pr[i - 1].second, pr[i].second);
  }
  double ap = 0.0;
  double prev_recall = 0.0;
  for (const auto& [recall, precision] : pr) {
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
  }
  return std::clamp(ap, 0.0, 1.0);
}

FilteredRatios filtered_ratios(std::span<const Detection> baseline,
                               std::span<const Detection> pipeline, const io::EvalSet& set,
                               double iou_thr, double base_conf) {
  std::set<ImageId> baseline_images;
  for (const auto& d : baseline) baseline_images.insert(d.image_id);
  for (const auto& d : pipeline) {
    if (!baseline_images.contains(d.image_id)) {
      throw ValidationError("pipeline detections cover image " + std::to_string(d.image_id) +
                            " which the baseline does not");
    }
  }

  FilteredRatios r;
  r.base_conf = base_conf;
  r.baseline = evaluate_at(baseline, set, iou_thr, base_conf);
  r.pipeline = evaluate_at(pipeline, set, iou_thr, base_conf);
  auto ratio = [](std::size_t base, std::size_t pipe, bool& undefined) {
    if (base == 0) {
      undefined = true;
      return 0.0;
    }
    return (static_cast<double>(base) - static_cast<double>(pipe)) / static_cast<double>(base);
  };
  r.tp_filtered = ratio(r.baseline.tp, r.pipeline.tp, r.tp_undefined);
  r.fp_filtered = ratio(r.baseline.fp, r.pipeline.fp, r.fp_undefined);
  return r;
}

}  // namespace hod
