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

#include "hod/scaling.hpp"
#include "hod/types.hpp"

namespace hod {

enum class CenterSource { Wrist, Elbow };

std::string_view to_string(CenterSource s);

struct CenterPoint {
  Point2d position{Point2d::Zero()};
  CenterSource source{CenterSource::Wrist};
};

/// Square region around a wrist (or elbow) of one person.
struct AreaOfInterest {
  ImageId image_id{0};
  Point2d center{Point2d::Zero()};
  double half_extent{0.0};
  int person_index{0};
  CenterSource center_source{CenterSource::Wrist};

  BBox box() const { return BBox::centered(center, half_extent); }

  friend bool operator==(const AreaOfInterest& a, const AreaOfInterest& b) {
    return a.image_id == b.image_id && a.center == b.center &&
           a.half_extent == b.half_extent && a.person_index == b.person_index &&
           a.center_source == b.center_source;
  }
};

/// Per side (left, then right): the wrist if detected, else the elbow.
std::vector<CenterPoint> center_points(const PersonPose& pose,
                                       double kp_threshold = kDefaultKeypointThreshold);

/// One AOI per center point of every pose, half-extent
/// `aoi_halfwidth_cm * px_per_cm` of that pose. Boxes are not clipped to the
/// image.
std::vector<AreaOfInterest> generate_aois(std::span<const PersonPose> poses,
                                          const ImageMeta& meta,
                                          const AnthropometricConstants& consts = {},
                                          double kp_threshold = kDefaultKeypointThreshold);

}  // namespace hod
