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
#include "hod/scaling.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "hod/error.hpp"

namespace hod {

namespace {

std::optional<double> segment_length(const PersonPose& pose, Joint a, Joint b,
                                     double kp_threshold) {
  const auto pa = pose.detected(a, kp_threshold);
  const auto pb = pose.detected(b, kp_threshold);
  if (!pa || !pb) return std::nullopt;
  const double len = (*pa - *pb).norm();
  if (!(len >= kMinMeasurementPx)) return std::nullopt;
  return len;
}

}  // namespace

std::string_view to_string(ScaleSource s) {
  switch (s) {
    case ScaleSource::Head: return "Head";
    case ScaleSource::Forearm: return "Forearm";
    case ScaleSource::UpperArm: return "UpperArm";
    case ScaleSource::Shoulder: return "Shoulder";
    case ScaleSource::Default: return "Default";
  }
  return "Unknown";
}

void AnthropometricConstants::validate() const {
  const std::array<std::pair<const char*, double>, 6> fields{{
      {"head_cm", head_cm},
      {"forearm_cm", forearm_cm},
      {"upper_arm_cm", upper_arm_cm},
      {"shoulder_cm", shoulder_cm},
      {"default_span_cm", default_span_cm},
      {"aoi_halfwidth_cm", aoi_halfwidth_cm},
  }};
  for (const auto& [name, value] : fields) {
    if (!std::isfinite(value) || value <= 0.0) {
      throw ValidationError(std::string("anthropometric constant ") + name +
                            " must be positive");
    }
  }
}

std::optional<double> head_width_px(const PersonPose& pose, double kp_threshold) {
  return segment_length(pose, Joint::LeftEar, Joint::RightEar, kp_threshold);
}

std::optional<ArmMeasurement> best_arm_segment(const PersonPose& pose,
                                               double kp_threshold,
                                               double ceiling_px) {
  struct Candidate {
    Joint a;
    Joint b;
    ArmSegment kind;
  };
  static constexpr std::array<Candidate, 4> kSegments{{
      {Joint::LeftElbow, Joint::LeftWrist, ArmSegment::Forearm},
      {Joint::RightElbow, Joint::RightWrist, ArmSegment::Forearm},
      {Joint::LeftShoulder, Joint::LeftElbow, ArmSegment::UpperArm},
      {Joint::RightShoulder, Joint::RightElbow, ArmSegment::UpperArm},
  }};

  std::optional<ArmMeasurement> best;
  for (const auto& seg : kSegments) {
    const auto len = segment_length(pose, seg.a, seg.b, kp_threshold);
    if (!len || *len > ceiling_px) continue;
    if (!best || *len > best->length_px) best = ArmMeasurement{*len, seg.kind};
  }
  return best;
}

std::optional<double> shoulder_width_px(const PersonPose& pose, double kp_threshold) {
  return segment_length(pose, Joint::LeftShoulder, Joint::RightShoulder, kp_threshold);
}

double default_px_per_cm(const ImageMeta& meta, const AnthropometricConstants& consts) {
  return (static_cast<double>(meta.max_dim()) / 4.0) / consts.default_span_cm;
}

ScalingFactor scaling_factor(const PersonPose& pose, const ImageMeta& meta,
                             const AnthropometricConstants& consts,
                             double kp_threshold) {
  constexpr double kNoCeiling = std::numeric_limits<double>::infinity();
  const double max_dim = static_cast<double>(meta.max_dim());
  const double limb_ceiling = pose.bottom_up ? max_dim / 4.0 : kNoCeiling;
  const double shoulder_ceiling = pose.bottom_up ? max_dim / 2.0 : kNoCeiling;

  if (const auto head = head_width_px(pose, kp_threshold); head && *head <= limb_ceiling) {
    return {*head / consts.head_cm, ScaleSource::Head};
  }
  if (const auto arm = best_arm_segment(pose, kp_threshold, limb_ceiling)) {
    if (arm->kind == ArmSegment::Forearm) {
      return {arm->length_px / consts.forearm_cm, ScaleSource::Forearm};
    }
    return {arm->length_px / consts.upper_arm_cm, ScaleSource::UpperArm};
  }
  if (const auto sh = shoulder_width_px(pose, kp_threshold); sh && *sh <= shoulder_ceiling) {
    return {*sh / consts.shoulder_cm, ScaleSource::Shoulder};
  }
  return {default_px_per_cm(meta, consts), ScaleSource::Default};
}

}  // namespace hod
