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
#include <string>
#include <string_view>
#include <vector>

#include "hod/aoi.hpp"
#include "hod/error.hpp"
#include "hod/filter.hpp"
#include "hod/io.hpp"
#include "hod/scaling.hpp"

namespace hod {

enum class Backend { TopDown, BottomUp };

std::string_view to_string(Backend b);

/// Top-down pose estimation while the person count stays within `threshold`;
/// a negative threshold always selects top-down.
Backend select_backend(int person_count, int threshold);

struct PipelineConfig {
  int pose_person_threshold{3};
  FilterConfig filter;
  /// Passed through to the inference side; the core never deblurs.
  bool deblur_enabled{false};
  double keypoint_conf_threshold{kDefaultKeypointThreshold};
  AnthropometricConstants consts;

  void validate() const;
};

/// Upper mode: detections first, AOIs only when some score is below the
/// upper threshold. No-upper mode (threshold above 1): AOIs first, and the
/// detector is never consulted for an image without AOIs.
enum class FilterMode { Upper, NoUpper };

std::string_view to_string(FilterMode m);

inline FilterMode mode_for(const FilterConfig& cfg) {
  return cfg.bypass_enabled() ? FilterMode::Upper : FilterMode::NoUpper;
}

struct ImageOutcome {
  ImageId image_id{0};
  std::vector<AreaOfInterest> aois;
  std::vector<FilterDecision> decisions;
  bool short_circuit{false};
  bool aois_generated{false};
  bool detections_consulted{false};

  std::vector<Detection> kept() const { return kept_detections(decisions); }
};

/// Runs one image. `detections()` and `aois()` are invoked lazily, at most
/// once each, in the order the mode requires.
template <typename DetectionSource, typename AoiSource>
ImageOutcome run_image(FilterMode mode, ImageId image_id, DetectionSource&& detections,
                       AoiSource&& aois, const FilterConfig& cfg) {
  ImageOutcome out;
  out.image_id = image_id;
  if (mode == FilterMode::Upper) {
    if (!cfg.bypass_enabled()) throw ValidationError("upper mode requires upper_conf <= 1");
    const std::vector<Detection> dets = detections();
    out.detections_consulted = true;
    if (all_above_upper(dets, cfg)) {
      out.short_circuit = true;
      out.decisions = filter_detections(dets, {}, cfg);
      return out;
    }
    out.aois = aois();
    out.aois_generated = true;
    out.decisions = filter_detections(dets, out.aois, cfg);
    return out;
  }

  if (cfg.bypass_enabled()) throw ValidationError("no-upper mode requires upper_conf > 1");
  out.aois = aois();
  out.aois_generated = true;
  if (out.aois.empty()) return out;
  const std::vector<Detection> dets = detections();
  out.detections_consulted = true;
  out.decisions = filter_detections(dets, out.aois, cfg);
  return out;
}

ImageOutcome run_image_upper_mode(std::span<const Detection> dets,
                                  std::span<const PersonPose> poses, const ImageMeta& meta,
                                  const PipelineConfig& cfg);

template <typename DetectionSource>
ImageOutcome run_image_no_upper_mode(DetectionSource&& detections,
                                     std::span<const PersonPose> poses,
                                     const ImageMeta& meta, const PipelineConfig& cfg) {
  return run_image(
      FilterMode::NoUpper, meta.image_id, std::forward<DetectionSource>(detections),
      [&] { return generate_aois(poses, meta, cfg.consts, cfg.keypoint_conf_threshold); },
      cfg.filter);
}

struct DatasetRun {
  FilterMode mode{FilterMode::Upper};
  std::vector<ImageOutcome> images;  // ascending image id
  std::vector<std::string> warnings;

  /// Kept detections ordered by image id, then input order.
  std::vector<Detection> kept() const;
  std::size_t images_consulted() const;
};

/// Full per-image pipeline over loaded interchange data. Detections or pose
/// entries for images absent from `images` are a ValidationError; images
/// without a pose entry are processed with zero poses and a warning.
DatasetRun run_dataset(std::span<const Detection> dets, const io::PoseFile& poses,
                       std::span<const ImageMeta> images, const PipelineConfig& cfg,
                       unsigned threads = 1);

/// Filtering against precomputed AOIs. The image set is the union of image
/// ids in `dets` and `aois`.
DatasetRun filter_dataset(std::span<const Detection> dets,
                          std::span<const AreaOfInterest> aois, const FilterConfig& cfg,
                          unsigned threads = 1);

}  // namespace hod
