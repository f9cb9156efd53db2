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

#include <span>
#include <string_view>
#include <vector>

#include "hod/aoi.hpp"
#include "hod/types.hpp"

namespace hod {

struct FilterConfig {
  /// Scores at or above this bypass AOI filtering. Values above 1 disable the
  /// bypass.
  double upper_conf{0.7};
  /// Minimum fraction of a detection's area that must lie inside one AOI.
  double overlap_frac{0.25};
  /// A detection's larger side may be at most this multiple of the AOI width.
  double size_cap_multiplier{2.5};

  bool bypass_enabled() const { return upper_conf <= 1.0; }
  void validate() const;
};

enum class FilterReason { AboveUpper, AoiMatch, NoAoiOverlap, TooLarge, NoAois };

std::string_view to_string(FilterReason r);

struct FilterDecision {
  Detection detection;
  bool kept{false};
  FilterReason reason{FilterReason::NoAois};
};

FilterDecision decide(const Detection& det, std::span<const AreaOfInterest> aois,
                      const FilterConfig& cfg);

/// One decision per detection, in input order.
std::vector<FilterDecision> filter_detections(std::span<const Detection> dets,
                                              std::span<const AreaOfInterest> aois,
                                              const FilterConfig& cfg);

/// True iff every score reaches the upper threshold; vacuously true when empty.
bool all_above_upper(std::span<const Detection> dets, const FilterConfig& cfg);

std::vector<Detection> kept_detections(std::span<const FilterDecision> decisions);

}  // namespace hod
