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

#include <limits>
#include <optional>
#include <string_view>

#include "hod/types.hpp"

namespace hod {

enum class ScaleSource { Head, Forearm, UpperArm, Shoulder, Default };

std::string_view to_string(ScaleSource s);

/// Estimated pixels per centimeter for one person.
struct ScalingFactor {
  double px_per_cm{0.0};
  ScaleSource source{ScaleSource::Default};
};

/// Body measurements (cm) used to convert pixel lengths into a scale, plus
/// the half-width of an area of interest.
struct AnthropometricConstants {
  double head_cm{19.8};
  double forearm_cm{26.0};
  double upper_arm_cm{32.0};
  double shoulder_cm{41.0};
  double default_span_cm{35.6};
  double aoi_halfwidth_cm{17.8};

  /// Throws ValidationError unless every constant is finite and positive.
  void validate() const;
};

/// Measurements shorter than this many pixels are degenerate and dropped.
inline constexpr double kMinMeasurementPx = 1.0;

enum class ArmSegment { Forearm, UpperArm };

struct ArmMeasurement {
  double length_px{0.0};
  ArmSegment kind{ArmSegment::Forearm};
};

/// Inter-ear distance. Absent if either ear is undetected or the distance is
/// degenerate.
std::optional<double> head_width_px(const PersonPose& pose,
                                    double kp_threshold = kDefaultKeypointThreshold);

/// Longest detected elbow-wrist or shoulder-elbow segment on either side.
/// Segments longer than `ceiling_px` are skipped before the maximum is taken.
std::optional<ArmMeasurement> best_arm_segment(
    const PersonPose& pose, double kp_threshold = kDefaultKeypointThreshold,
    double ceiling_px = std::numeric_limits<double>::infinity());

std::optional<double> shoulder_width_px(const PersonPose& pose,
                                        double kp_threshold = kDefaultKeypointThreshold);

/// Fallback chain head -> longest arm segment -> shoulders -> image default.
/// For bottom-up poses, head and arm measurements above max_dim/4 and
/// shoulder widths above max_dim/2 are ignored.
ScalingFactor scaling_factor(const PersonPose& pose, const ImageMeta& meta,
                             const AnthropometricConstants& consts = {},
                             double kp_threshold = kDefaultKeypointThreshold);

/// Scale used when no body measurement survives: max_dim/4 spans
/// `default_span_cm`.
double default_px_per_cm(const ImageMeta& meta, const AnthropometricConstants& consts);

}  // namespace hod
