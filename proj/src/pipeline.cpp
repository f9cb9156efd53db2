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
#include "hod/pipeline.hpp"

#include <cmath>
#include <map>
#include <set>

#include "hod/parallel.hpp"

namespace hod {

namespace {

template <typename T>
std::map<ImageId, std::vector<T>> group_by_image(std::span<const T> items) {
  std::map<ImageId, std::vector<T>> groups;
  for (const auto& item : items) groups[item.image_id].push_back(item);
  return groups;
}

template <typename T>
std::span<const T> lookup(const std::map<ImageId, std::vector<T>>& groups, ImageId id) {
  const auto it = groups.find(id);
  if (it == groups.end()) return {};
  return it->second;
}

}  // namespace

std::string_view to_string(Backend b) {
  return b == Backend::TopDown ? "TopDown" : "BottomUp";
}

std::string_view to_string(FilterMode m) {
  return m == FilterMode::Upper ? "upper" : "no-upper";
}

Backend select_backend(int person_count, int threshold) {
  if (threshold < 0) return Backend::TopDown;
  return person_count <= threshold ? Backend::TopDown : Backend::BottomUp;
}

void PipelineConfig::validate() const {
  filter.validate();
  consts.validate();
  if (!(keypoint_conf_threshold >= 0.0 && keypoint_conf_threshold <= 1.0)) {
    throw ValidationError("keypoint_conf_threshold must lie in [0, 1]");
  }
}

ImageOutcome run_image_upper_mode(std::span<const Detection> dets,
                                  std::span<const PersonPose> poses, const ImageMeta& meta,
                                  const PipelineConfig& cfg) {
  return run_image(
      FilterMode::Upper, meta.image_id,
      [&] { return std::vector<Detection>(dets.begin(), dets.end()); },
      [&] { return generate_aois(poses, meta, cfg.consts, cfg.keypoint_conf_threshold); },
      cfg.filter);
}

std::vector<Detection> DatasetRun::kept() const {
  std::vector<Detection> out;
  for (const auto& img : images) {
    for (const auto& d : img.decisions) {
      if (d.kept) out.push_back(d.detection);
    }
  }
  return out;
}

std::size_t DatasetRun::images_consulted() const {
  std::size_t n = 0;
  for (const auto& img : images) n += img.detections_consulted ? 1 : 0;
  return n;
}

DatasetRun run_dataset(std::span<const Detection> dets, const io::PoseFile& poses,
                       std::span<const ImageMeta> images, const PipelineConfig& cfg,
                       unsigned threads) {
  cfg.validate();
  std::map<ImageId, ImageMeta> metas;
  for (const auto& m : images) metas.emplace(m.image_id, m);

  std::set<ImageId> unknown;
  for (const auto& d : dets) {
    if (!metas.contains(d.image_id)) unknown.insert(d.image_id);
  }
  for (const auto& e : poses.entries) {
    if (!metas.contains(e.image_id)) unknown.insert(e.image_id);
  }
  if (!unknown.empty()) {
    throw ValidationError("inputs reference " + std::to_string(unknown.size()) +
                          " image id(s) missing from the image metadata, first: " +
                          std::to_string(*unknown.begin()));
  }

  DatasetRun run;
  run.mode = mode_for(cfg.filter);
  const auto by_image = group_by_image(dets);
  std::map<ImageId, const io::PoseEntry*> pose_index;
  for (const auto& e : poses.entries) pose_index.emplace(e.image_id, &e);

  std::vector<const ImageMeta*> order;
  for (const auto& [id, meta] : metas) order.push_back(&meta);

  for (const auto* meta : order) {
    const auto it = pose_index.find(meta->image_id);
    if (it == pose_index.end()) {
      run.warnings.push_back("image " + std::to_string(meta->image_id) +
                             ": no pose entry, treated as zero poses");
      continue;
    }
    const auto& e = *it->second;
    const bool expect_bottom_up =
        select_backend(e.person_count, cfg.pose_person_threshold) == Backend::BottomUp;
    if (expect_bottom_up != e.bottom_up) {
      run.warnings.push_back("image " + std::to_string(e.image_id) + ": person_count " +
                             std::to_string(e.person_count) + " with pose threshold " +
                             std::to_string(cfg.pose_person_threshold) + " selects " +
                             std::string(to_string(expect_bottom_up ? Backend::BottomUp
                                                                    : Backend::TopDown)) +
                             " but poses are marked " +
                             (e.bottom_up ? "bottom-up" : "top-down"));
    }
  }

  run.images.resize(order.size());
  parallel_for(order.size(), threads, [&](std::size_t i) {
    const ImageMeta& meta = *order[i];
    const auto it = pose_index.find(meta.image_id);
    std::span<const PersonPose> image_poses;
    if (it != pose_index.end()) image_poses = it->second->poses;
    const auto image_dets = lookup(by_image, meta.image_id);
    auto provide = [&] { return std::vector<Detection>(image_dets.begin(), image_dets.end()); };
    run.images[i] = run.mode == FilterMode::Upper
                        ? run_image_upper_mode(image_dets, image_poses, meta, cfg)
                        : run_image_no_upper_mode(provide, image_poses, meta, cfg);
  });
  return run;
}

DatasetRun filter_dataset(std::span<const Detection> dets,
                          std::span<const AreaOfInterest> aois, const FilterConfig& cfg,
                          unsigned threads) {
  cfg.validate();
  DatasetRun run;
  run.mode = mode_for(cfg);
  const auto dets_by_image = group_by_image(dets);
  const auto aois_by_image = group_by_image(aois);

  std::set<ImageId> ids;
  for (const auto& [id, _] : dets_by_image) ids.insert(id);
  for (const auto& [id, _] : aois_by_image) ids.insert(id);
  const std::vector<ImageId> order(ids.begin(), ids.end());

  run.images.resize(order.size());
  parallel_for(order.size(), threads, [&](std::size_t i) {
    const ImageId id = order[i];
    const auto image_dets = lookup(dets_by_image, id);
    const auto image_aois = lookup(aois_by_image, id);
    run.images[i] = run_image(
        run.mode, id,
        [&] { return std::vector<Detection>(image_dets.begin(), image_dets.end()); },
        [&] { return std::vector<AreaOfInterest>(image_aois.begin(), image_aois.end()); },
        cfg);
  });
  return run;
}

}  // namespace hod
