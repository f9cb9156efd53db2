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

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hod/aoi.hpp"
#include "hod/scaling.hpp"
#include "hod/types.hpp"

namespace hod::io {

namespace fs = std::filesystem;
using json = nlohmann::json;

// COCO annotation files. Fields not modelled here (file_name, segmentation,
// area, ...) are kept in `extra` and written back unchanged.

struct CocoImage {
  ImageMeta meta;
  json extra = json::object();
};

struct CocoAnnotation {
  AnnotationId id{0};
  ImageId image_id{0};
  ClassId class_id{0};
  BBox bbox;
  json extra = json::object();

  bool iscrowd() const;
};

struct CocoCategory {
  ClassId id{0};
  std::string name;
  json extra = json::object();
};

struct CocoDataset {
  json header = json::object();  // top-level keys other than the three lists
  std::vector<CocoImage> images;
  std::vector<CocoAnnotation> annotations;
  std::vector<CocoCategory> categories;

  std::vector<ImageMeta> image_metas() const;
};

struct HandheldFlags {
  std::set<AnnotationId> handheld_annotation_ids;
};

struct PoseEntry {
  ImageId image_id{0};
  int person_count{0};
  bool bottom_up{false};
  std::vector<PersonPose> poses;

  friend bool operator==(const PoseEntry&, const PoseEntry&) = default;
};

struct PoseFile {
  std::vector<PoseEntry> entries;

  /// nullptr when the image has no entry.
  const PoseEntry* find(ImageId id) const;
};

/// Images of an evaluation set with their annotations split into the
/// handheld tier and everything else.
struct EvalImage {
  CocoImage image;
  std::vector<CocoAnnotation> handheld;
  std::vector<CocoAnnotation> other;
};

struct EvalSet {
  std::vector<EvalImage> images;  // ascending image id
  std::vector<CocoCategory> categories;

  const EvalImage* find(ImageId id) const;
  std::size_t handheld_count() const;
};

// Parsing ------------------------------------------------------------------

/// Parses JSON text; malformed input raises ParseError with the byte offset.
json parse_json(std::string_view text, std::string_view origin);
json read_json(const fs::path& path);

CocoDataset coco_from_json(const json& j);
json to_json(const CocoDataset& ds);

std::vector<Detection> detections_from_json(const json& j);
json to_json(std::span<const Detection> dets);

PoseFile poses_from_json(const json& j);
json to_json(const PoseFile& poses);

std::vector<AreaOfInterest> aois_from_json(const json& j);
json to_json(std::span<const AreaOfInterest> aois);

HandheldFlags flags_from_json(const json& j);
json to_json(const HandheldFlags& flags);

/// Eval sets are COCO files whose annotations carry a boolean "handheld".
EvalSet eval_set_from_json(const json& j);
json to_json(const EvalSet& set);

AnthropometricConstants constants_from_json(const json& j);
json to_json(const AnthropometricConstants& c);

// Files --------------------------------------------------------------------

CocoDataset load_coco(const fs::path& path);
std::vector<Detection> load_detections(const fs::path& path);
PoseFile load_poses(const fs::path& path);
std::vector<AreaOfInterest> load_aois(const fs::path& path);
HandheldFlags load_flags(const fs::path& path);
EvalSet load_eval_set(const fs::path& path);
AnthropometricConstants load_constants(const fs::path& path);

void save_coco(const CocoDataset& ds, const fs::path& path);
void save_detections(std::span<const Detection> dets, const fs::path& path);
void save_poses(const PoseFile& poses, const fs::path& path);
void save_aois(std::span<const AreaOfInterest> aois, const fs::path& path);
void save_flags(const HandheldFlags& flags, const fs::path& path);
void save_eval_set(const EvalSet& set, const fs::path& path);

/// Serialized form used for every output file: two-space indent, sorted keys,
/// shortest round-trip numbers, trailing newline.
std::string dump(const json& j);

std::string read_text(const fs::path& path);
/// Writes via a temporary sibling and rename, so readers never observe a
/// partially written file.
void write_text_atomic(const fs::path& path, std::string_view content);

}  // namespace hod::io
