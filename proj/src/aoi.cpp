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
#include "hod/aoi.hpp"

namespace hod {

std::string_view to_string(CenterSource s) {
  return s == CenterSource::Wrist ? "Wrist" : "Elbow";
}

std::vector<CenterPoint> center_points(const PersonPose& pose, double kp_threshold) {
  std::vector<CenterPoint> centers;
  const std::pair<Joint, Joint> sides[] = {
      {Joint::LeftWrist, Joint::LeftElbow},
      {Joint::RightWrist, Joint::RightElbow},
  };
  for (const auto& [wrist, elbow] : sides) {
    if (const auto p = pose.detected(wrist, kp_threshold)) {
      centers.push_back({*p, CenterSource::Wrist});
    } else if (const auto q = pose.detected(elbow, kp_threshold)) {
      centers.push_back({*q, CenterSource::Elbow});
    }
  }
  return centers;
}

std::vector<AreaOfInterest> generate_aois(std::span<const PersonPose> poses,
                                          const ImageMeta& meta,
                                          const AnthropometricConstants& consts,
                                          double kp_threshold) {
  std::vector<AreaOfInterest> aois;
  for (std::size_t i = 0; i < poses.size(); ++i) {
    const auto centers = center_points(poses[i], kp_threshold);
    if (centers.empty()) continue;
    const ScalingFactor s = scaling_factor(poses[i], meta, consts, kp_threshold);
    const double half = consts.aoi_halfwidth_cm * s.px_per_cm;
    for (const auto& c : centers) {
      aois.push_back({meta.image_id, c.position, half, static_cast<int>(i), c.source});
    }
  }
  return aois;
}

}  // namespace hod
