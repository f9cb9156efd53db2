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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "hod/geometry.hpp"

namespace hod {

using ImageId = std::int64_t;
using ClassId = std::int64_t;
using AnnotationId = std::int64_t;

struct Detection {
  ImageId image_id{0};
  ClassId class_id{0};
  BBox bbox;
  double score{0.0};

  friend bool operator==(const Detection&, const Detection&) = default;
};

inline constexpr std::size_t kNumKeypoints = 17;

/// COCO keypoint order.
enum class Joint : std::size_t {
  Nose,
  LeftEye,
  RightEye,
  LeftEar,
  RightEar,
  LeftShoulder,
  RightShoulder,
  LeftElbow,
  RightElbow,
  LeftWrist,
  RightWrist,
  LeftHip,
  RightHip,
  LeftKnee,
  RightKnee,
  LeftAnkle,
  RightAnkle,
};

/// Keypoints with confidence below this are treated as undetected.
inline constexpr double kDefaultKeypointThreshold = 0.3;

struct Keypoint {
  Point2d position{Point2d::Zero()};
  double conf{0.0};

  friend bool operator==(const Keypoint& a, const Keypoint& b) {
    return a.position == b.position && a.conf == b.conf;
  }
};

struct PersonPose {
  std::array<Keypoint, kNumKeypoints> keypoints{};
  bool bottom_up{false};

  const Keypoint& operator[](Joint j) const {
    return keypoints[static_cast<std::size_t>(j)];
  }
  Keypoint& operator[](Joint j) { return keypoints[static_cast<std::size_t>(j)]; }

  /// Position of `j` if its confidence reaches `threshold`.
  std::optional<Point2d> detected(Joint j, double threshold) const {
    const Keypoint& k = (*this)[j];
    if (k.conf >= threshold) return k.position;
    return std::nullopt;
  }

  friend bool operator==(const PersonPose&, const PersonPose&) = default;
};

struct ImageMeta {
  ImageId image_id{0};
  int width{0};
  int height{0};

  int max_dim() const { return width > height ? width : height; }

  friend bool operator==(const ImageMeta&, const ImageMeta&) = default;
};

}  // namespace hod
