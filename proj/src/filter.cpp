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
#include "hod/filter.hpp"

#include <algorithm>
#include <cmath>

#include "hod/error.hpp"

namespace hod {

std::string_view to_string(FilterReason r) {
  switch (r) {
    case FilterReason::AboveUpper: return "AboveUpper";
    case FilterReason::AoiMatch: return "AoiMatch";
    case FilterReason::NoAoiOverlap: return "NoAoiOverlap";
    case FilterReason::TooLarge: return "TooLarge";
    case FilterReason::NoAois: return "NoAois";
  }
  return "Unknown";
}

void FilterConfig::validate() const {
  if (!std::isfinite(upper_conf) || upper_conf < 0.0) {
    throw ValidationError("upper_conf must be a non-negative number");
  }
  if (!(overlap_frac >= 0.0 && overlap_frac <= 1.0)) {
    throw ValidationError("overlap_frac must lie in [0, 1]");
  }
  if (!std::isfinite(size_cap_multiplier) || size_cap_multiplier <= 0.0) {
    throw ValidationError("size_cap_multiplier must be positive");
  }
}

FilterDecision decide(const Detection& det, std::span<const AreaOfInterest> aois,
                      const FilterConfig& cfg) {
  if (det.score >= cfg.upper_conf) return {det, true, FilterReason::AboveUpper};
  if (aois.empty()) return {det, false, FilterReason::NoAois};

  bool overlapped = false;
  const double det_side = det.bbox.max_side();
  for (const auto& aoi : aois) {
    const BBox box = aoi.box();
    if (overlap_fraction(det.bbox, box) < cfg.overlap_frac) continue;
    overlapped = true;
    // The size cap is checked against the AOI that supplied the overlap.
    if (det_side <= cfg.size_cap_multiplier * box.w) {
      return {det, true, FilterReason::AoiMatch};
    }
  }
  return {det, false, overlapped ? FilterReason::TooLarge : FilterReason::NoAoiOverlap};
}

std::vector<FilterDecision> filter_detections(std::span<const Detection> dets,
                                              std::span<const AreaOfInterest> aois,
                                              const FilterConfig& cfg) {
  std::vector<FilterDecision> out;
  out.reserve(dets.size());
  for (const auto& d : dets) out.push_back(decide(d, aois, cfg));
  return out;
}

bool all_above_upper(std::span<const Detection> dets, const FilterConfig& cfg) {
  return std::all_of(dets.begin(), dets.end(),
                     [&](const Detection& d) { return d.score >= cfg.upper_conf; });
}

std::vector<Detection> kept_detections(std::span<const FilterDecision> decisions) {
  std::vector<Detection> out;
  for (const auto& d : decisions) {
    if (d.kept) out.push_back(d.detection);
  }
  return out;
}

}  // namespace hod
