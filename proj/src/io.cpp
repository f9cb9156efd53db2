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
#include "hod/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "hod/error.hpp"

namespace hod::io {

namespace {

constexpr std::size_t kMaxListedOffenders = 20;

std::string where(std::string_view ctx, std::size_t index) {
  return std::string(ctx) + "[" + std::to_string(index) + "]";
}

const json& field(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) throw ValidationError(ctx + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(ctx + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::int64_t as_int(const json& v, const std::string& ctx) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d)) return static_cast<std::int64_t>(d);
  }
  throw ValidationError(ctx + ": expected an integer");
}

double as_real(const json& v, const std::string& ctx) {
  if (!v.is_number()) throw ValidationError(ctx + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ValidationError(ctx + ": expected a finite number");
  return d;
}

const json& as_array(const json& v, const std::string& ctx) {
  if (!v.is_array()) throw ValidationError(ctx + ": expected an array");
  return v;
}

BBox bbox_from_json(const json& v, const std::string& ctx) {
  if (!v.is_array() || v.size() != 4) {
    throw ValidationError(ctx + ".bbox: expected [x, y, w, h]");
  }
  BBox b{as_real(v[0], ctx + ".bbox"), as_real(v[1], ctx + ".bbox"),
         as_real(v[2], ctx + ".bbox"), as_real(v[3], ctx + ".bbox")};
  if (!b.valid()) throw ValidationError(ctx + ".bbox: negative width or height");
  return b;
}

json bbox_to_json(const BBox& b) { return json::array({b.x, b.y, b.w, b.h}); }

json without(const json& obj, std::initializer_list<const char*> keys) {
  json out = json::object();
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(keys.begin(), keys.end(),
                     [&](const char* k) { return it.key() == k; }) == keys.end()) {
      out[it.key()] = it.value();
    }
  }
  return out;
}

template <typename Ids>
std::string list_ids(const Ids& ids) {
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto id : ids) {
    if (n == kMaxListedOffenders) {
      os << ", ... (" << ids.size() << " total)";
      break;
    }
    os << (n++ ? ", " : "") << id;
  }
  return os.str();
}

CocoImage image_from_json(const json& j, const std::string& ctx) {
  CocoImage img;
  img.meta.image_id = as_int(field(j, "id", ctx), ctx + ".id");
  const auto w = as_int(field(j, "width", ctx), ctx + ".width");
  const auto h = as_int(field(j, "height", ctx), ctx + ".height");
  if (w <= 0 || h <= 0) throw ValidationError(ctx + ": image dimensions must be positive");
  img.meta.width = static_cast<int>(w);
  img.meta.height = static_cast<int>(h);
  img.extra = without(j, {"id", "width", "height"});
  return img;
}

json image_to_json(const CocoImage& img) {
  json j = img.extra;
  j["id"] = img.meta.image_id;
  j["width"] = img.meta.width;
  j["height"] = img.meta.height;
  return j;
}

CocoAnnotation annotation_from_json(const json& j, const std::string& ctx) {
  CocoAnnotation a;
  a.id = as_int(field(j, "id", ctx), ctx + ".id");
  a.image_id = as_int(field(j, "image_id", ctx), ctx + ".image_id");
  a.class_id = as_int(field(j, "category_id", ctx), ctx + ".category_id");
  a.bbox = bbox_from_json(field(j, "bbox", ctx), ctx);
  a.extra = without(j, {"id", "image_id", "category_id", "bbox"});
  return a;
}

json annotation_to_json(const CocoAnnotation& a) {
  json j = a.extra;
  j["id"] = a.id;
  j["image_id"] = a.image_id;
  j["category_id"] = a.class_id;
  j["bbox"] = bbox_to_json(a.bbox);
  return j;
}

CocoCategory category_from_json(const json& j, const std::string& ctx) {
  CocoCategory c;
  c.id = as_int(field(j, "id", ctx), ctx + ".id");
  if (const auto it = j.find("name"); it != j.end() && it->is_string()) {
    c.name = it->get<std::string>();
  }
  c.extra = without(j, {"id", "name"});
  return c;
}

json category_to_json(const CocoCategory& c) {
  json j = c.extra;
  j["id"] = c.id;
  j["name"] = c.name;
  return j;
}

Keypoint keypoint_at(const json& arr, std::size_t k, const std::string& ctx) {
  Keypoint kp;
  kp.position = {as_real(arr[3 * k], ctx), as_real(arr[3 * k + 1], ctx)};
  kp.conf = as_real(arr[3 * k + 2], ctx);
  if (kp.conf < 0.0 || kp.conf > 1.0) {
    throw ValidationError(ctx + ": keypoint " + std::to_string(k) +
                          " confidence outside [0, 1]");
  }
  return kp;
}

CenterSource center_source_from(const json& v, const std::string& ctx) {
  if (v == "Wrist") return CenterSource::Wrist;
  if (v == "Elbow") return CenterSource::Elbow;
  throw ValidationError(ctx + ".center_source: expected \"Wrist\" or \"Elbow\"");
}

}  // namespace

bool CocoAnnotation::iscrowd() const {
  const auto it = extra.find("iscrowd");
  return it != extra.end() && it->is_number() && it->get<int>() != 0;
}

std::vector<ImageMeta> CocoDataset::image_metas() const {
  std::vector<ImageMeta> out;
  out.reserve(images.size());
  for (const auto& img : images) out.push_back(img.meta);
  return out;
}

const PoseEntry* PoseFile::find(ImageId id) const {
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const PoseEntry& e) { return e.image_id == id; });
  return it == entries.end() ? nullptr : &*it;
}

const EvalImage* EvalSet::find(ImageId id) const {
  const auto it = std::lower_bound(
      images.begin(), images.end(), id,
      [](const EvalImage& e, ImageId v) { return e.image.meta.image_id < v; });
  if (it == images.end() || it->image.meta.image_id != id) return nullptr;
  return &*it;
}

std::size_t EvalSet::handheld_count() const {
  std::size_t n = 0;
  for (const auto& img : images) n += img.handheld.size();
  return n;
}

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(origin) + ": malformed JSON at byte " +
                         std::to_string(e.byte) + ": " + e.what(),
                     e.byte);
  }
}

json read_json(const fs::path& path) { return parse_json(read_text(path), path.string()); }

CocoDataset coco_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("COCO file: expected a top-level object");
  CocoDataset ds;
  ds.header = without(j, {"images", "annotations", "categories"});

  const auto& images = as_array(field(j, "images", "COCO file"), "images");
  ds.images.reserve(images.size());
  std::set<ImageId> image_ids;
  for (std::size_t i = 0; i < images.size(); ++i) {
    ds.images.push_back(image_from_json(images[i], where("images", i)));
    if (!image_ids.insert(ds.images.back().meta.image_id).second) {
      throw ValidationError("images: duplicate image id " +
                            std::to_string(ds.images.back().meta.image_id));
    }
  }

  if (const auto it = j.find("annotations"); it != j.end()) {
    const auto& anns = as_array(*it, "annotations");
    ds.annotations.reserve(anns.size());
    std::set<AnnotationId> ann_ids;
    std::set<ImageId> dangling;
    std::vector<AnnotationId> duplicates;
    for (std::size_t i = 0; i < anns.size(); ++i) {
      auto a = annotation_from_json(anns[i], where("annotations", i));
      if (!ann_ids.insert(a.id).second) duplicates.push_back(a.id);
      if (!image_ids.contains(a.image_id)) dangling.insert(a.image_id);
      ds.annotations.push_back(std::move(a));
    }
    if (!duplicates.empty()) {
      throw ValidationError("annotations: duplicate annotation ids: " + list_ids(duplicates));
    }
    if (!dangling.empty()) {
      throw ValidationError("annotations reference missing image ids: " + list_ids(dangling));
    }
  }

  if (const auto it = j.find("categories"); it != j.end()) {
    const auto& cats = as_array(*it, "categories");
    for (std::size_t i = 0; i < cats.size(); ++i) {
      ds.categories.push_back(category_from_json(cats[i], where("categories", i)));
    }
  }
  return ds;
}

json to_json(const CocoDataset& ds) {
  json j = ds.header;
  j["images"] = json::array();
  for (const auto& img : ds.images) j["images"].push_back(image_to_json(img));
  j["annotations"] = json::array();
  for (const auto& a : ds.annotations) j["annotations"].push_back(annotation_to_json(a));
  j["categories"] = json::array();
  for (const auto& c : ds.categories) j["categories"].push_back(category_to_json(c));
  return j;
}

std::vector<Detection> detections_from_json(const json& j) {
  const auto& arr = as_array(j, "detections");
  std::vector<Detection> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto ctx = where("detections", i);
    const auto& r = arr[i];
    Detection d;
    d.image_id = as_int(field(r, "image_id", ctx), ctx + ".image_id");
    d.class_id = as_int(field(r, "category_id", ctx), ctx + ".category_id");
    d.bbox = bbox_from_json(field(r, "bbox", ctx), ctx);
    d.score = as_real(field(r, "score", ctx), ctx + ".score");
    if (d.score < 0.0 || d.score > 1.0) {
      throw ValidationError(ctx + ".score: outside [0, 1]");
    }
    out.push_back(d);
  }
  return out;
}

json to_json(std::span<const Detection> dets) {
  json arr = json::array();
  for (const auto& d : dets) {
    arr.push_back({{"image_id", d.image_id},
                   {"category_id", d.class_id},
                   {"bbox", bbox_to_json(d.bbox)},
                   {"score", d.score}});
  }
  return arr;
}

PoseFile poses_from_json(const json& j) {
  const auto& arr = as_array(j, "poses file");
  PoseFile pf;
  pf.entries.reserve(arr.size());
  std::set<ImageId> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto ctx = where("entries", i);
    const auto& r = arr[i];
    PoseEntry e;
    e.image_id = as_int(field(r, "image_id", ctx), ctx + ".image_id");
    const auto count = as_int(field(r, "person_count", ctx), ctx + ".person_count");
    if (count < 0) throw ValidationError(ctx + ".person_count: must be non-negative");
    e.person_count = static_cast<int>(count);
    const auto& bu = field(r, "bottom_up", ctx);
    if (!bu.is_boolean()) throw ValidationError(ctx + ".bottom_up: expected a boolean");
    e.bottom_up = bu.get<bool>();
    if (!seen.insert(e.image_id).second) {
      throw ValidationError(ctx + ": duplicate entry for image " + std::to_string(e.image_id));
    }
    const auto& poses = as_array(field(r, "poses", ctx), ctx + ".poses");
    for (std::size_t p = 0; p < poses.size(); ++p) {
      const auto pctx = ctx + where(".poses", p);
      const auto& kps = as_array(field(poses[p], "keypoints", pctx), pctx + ".keypoints");
      if (kps.size() != 3 * kNumKeypoints) {
        throw ValidationError(pctx + ".keypoints: expected 51 numbers, got " +
                              std::to_string(kps.size()));
      }
      PersonPose pose;
      pose.bottom_up = e.bottom_up;
      for (std::size_t k = 0; k < kNumKeypoints; ++k) {
        pose.keypoints[k] = keypoint_at(kps, k, pctx + ".keypoints");
      }
      e.poses.push_back(pose);
    }
    pf.entries.push_back(std::move(e));
  }
  return pf;
}

json to_json(const PoseFile& pf) {
  json arr = json::array();
  for (const auto& e : pf.entries) {
    json poses = json::array();
    for (const auto& p : e.poses) {
      json kps = json::array();
      for (const auto& k : p.keypoints) {
        kps.push_back(k.position.x());
        kps.push_back(k.position.y());
        kps.push_back(k.conf);
      }
      poses.push_back({{"keypoints", std::move(kps)}});
    }
    arr.push_back({{"image_id", e.image_id},
                   {"person_count", e.person_count},
                   {"bottom_up", e.bottom_up},
                   {"poses", std::move(poses)}});
  }
  return arr;
}

std::vector<AreaOfInterest> aois_from_json(const json& j) {
  const auto& arr = as_array(j, "aois");
  std::vector<AreaOfInterest> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto ctx = where("aois", i);
    const auto& r = arr[i];
    AreaOfInterest a;
    a.image_id = as_int(field(r, "image_id", ctx), ctx + ".image_id");
    a.center = {as_real(field(r, "cx", ctx), ctx + ".cx"),
                as_real(field(r, "cy", ctx), ctx + ".cy")};
    a.half_extent = as_real(field(r, "half_extent", ctx), ctx + ".half_extent");
    if (a.half_extent <= 0.0) throw ValidationError(ctx + ".half_extent: must be positive");
    a.person_index = static_cast<int>(as_int(field(r, "person_index", ctx), ctx));
    a.center_source = center_source_from(field(r, "center_source", ctx), ctx);
    out.push_back(a);
  }
  return out;
}

json to_json(std::span<const AreaOfInterest> aois) {
  json arr = json::array();
  for (const auto& a : aois) {
    arr.push_back({{"image_id", a.image_id},
                   {"cx", a.center.x()},
                   {"cy", a.center.y()},
                   {"half_extent", a.half_extent},
                   {"person_index", a.person_index},
                   {"center_source", std::string(to_string(a.center_source))}});
  }
  return arr;
}

HandheldFlags flags_from_json(const json& j) {
  const json* ids = &j;
  if (j.is_object()) ids = &field(j, "handheld_annotation_ids", "flags file");
  const auto& arr = as_array(*ids, "handheld_annotation_ids");
  HandheldFlags flags;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    flags.handheld_annotation_ids.insert(as_int(arr[i], where("handheld_annotation_ids", i)));
  }
  return flags;
}

json to_json(const HandheldFlags& flags) {
  return {{"handheld_annotation_ids", json(flags.handheld_annotation_ids)}};
}

EvalSet eval_set_from_json(const json& j) {
  CocoDataset ds = coco_from_json(j);
  EvalSet set;
  set.categories = std::move(ds.categories);
  std::map<ImageId, std::size_t> slot;
  std::sort(ds.images.begin(), ds.images.end(), [](const CocoImage& a, const CocoImage& b) {
    return a.meta.image_id < b.meta.image_id;
  });
  for (auto& img : ds.images) {
    slot[img.meta.image_id] = set.images.size();
    set.images.push_back({std::move(img), {}, {}});
  }
  for (auto& a : ds.annotations) {
    bool handheld = false;
    if (const auto it = a.extra.find("handheld"); it != a.extra.end()) {
      if (!it->is_boolean()) {
        throw ValidationError("annotation " + std::to_string(a.id) +
                              ": \"handheld\" must be a boolean");
      }
      handheld = it->get<bool>();
      a.extra.erase("handheld");
    }
    auto& img = set.images[slot.at(a.image_id)];
    (handheld ? img.handheld : img.other).push_back(std::move(a));
  }
  return set;
}

json to_json(const EvalSet& set) {
  json j = json::object();
  j["images"] = json::array();
  j["annotations"] = json::array();
  j["categories"] = json::array();
  for (const auto& img : set.images) {
    j["images"].push_back(image_to_json(img.image));
    std::vector<std::pair<const CocoAnnotation*, bool>> anns;
    for (const auto& a : img.handheld) anns.emplace_back(&a, true);
    for (const auto& a : img.other) anns.emplace_back(&a, false);
    std::sort(anns.begin(), anns.end(),
              [](const auto& x, const auto& y) { return x.first->id < y.first->id; });
    for (const auto& [a, handheld] : anns) {
      json aj = annotation_to_json(*a);
      aj["handheld"] = handheld;
      j["annotations"].push_back(std::move(aj));
    }
  }
  for (const auto& c : set.categories) j["categories"].push_back(category_to_json(c));
  return j;
}

AnthropometricConstants constants_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("constants: expected an object");
  AnthropometricConstants c;
  const std::map<std::string, double*> slots{
      {"head_cm", &c.head_cm},
      {"forearm_cm", &c.forearm_cm},
      {"upper_arm_cm", &c.upper_arm_cm},
      {"shoulder_cm", &c.shoulder_cm},
      {"default_span_cm", &c.default_span_cm},
      {"aoi_halfwidth_cm", &c.aoi_halfwidth_cm},
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto slot = slots.find(it.key());
    if (slot == slots.end()) {
      throw ValidationError("constants: unknown key \"" + it.key() + "\"");
    }
    *slot->second = as_real(it.value(), "constants." + it.key());
  }
  c.validate();
  return c;
}

json to_json(const AnthropometricConstants& c) {
  return {{"head_cm", c.head_cm},
          {"forearm_cm", c.forearm_cm},
          {"upper_arm_cm", c.upper_arm_cm},
          {"shoulder_cm", c.shoulder_cm},
          {"default_span_cm", c.default_span_cm},
          {"aoi_halfwidth_cm", c.aoi_halfwidth_cm}};
}

CocoDataset load_coco(const fs::path& path) { return coco_from_json(read_json(path)); }
std::vector<Detection> load_detections(const fs::path& path) {
  return detections_from_json(read_json(path));
}
PoseFile load_poses(const fs::path& path) { return poses_from_json(read_json(path)); }
std::vector<AreaOfInterest> load_aois(const fs::path& path) {
  return aois_from_json(read_json(path));
}
HandheldFlags load_flags(const fs::path& path) { return flags_from_json(read_json(path)); }
EvalSet load_eval_set(const fs::path& path) { return eval_set_from_json(read_json(path)); }
AnthropometricConstants load_constants(const fs::path& path) {
  return constants_from_json(read_json(path));
}

void save_coco(const CocoDataset& ds, const fs::path& path) {
  write_text_atomic(path, dump(to_json(ds)));
}
void save_detections(std::span<const Detection> dets, const fs::path& path) {
  write_text_atomic(path, dump(to_json(dets)));
}
void save_poses(const PoseFile& poses, const fs::path& path) {
  write_text_atomic(path, dump(to_json(poses)));
}
void save_aois(std::span<const AreaOfInterest> aois, const fs::path& path) {
  write_text_atomic(path, dump(to_json(aois)));
}
void save_flags(const HandheldFlags& flags, const fs::path& path) {
  write_text_atomic(path, dump(to_json(flags)));
}
void save_eval_set(const EvalSet& set, const fs::path& path) {
  write_text_atomic(path, dump(to_json(set)));
}

std::string dump(const json& j) {
  return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return ss.str();
}

void write_text_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    const std::string reason = ec.message();
    fs::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " into place: " + reason);
  }
}

}  // namespace hod::io
