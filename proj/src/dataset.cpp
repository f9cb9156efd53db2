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
#include "hod/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "hod/error.hpp"
#include "hod/random.hpp"

namespace hod {

namespace {

std::size_t floor_share(std::size_t n, double fraction) {
  // Guards against n * fraction landing a hair below an exact integer.
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * fraction + 1e-9));
}

}  // namespace

void SplitSpec::validate() const {
  for (const double f : {train, val, test}) {
    if (!std::isfinite(f) || f < 0.0) {
      throw ValidationError("split fractions must be non-negative");
    }
  }
  if (std::abs(train + val + test - 1.0) > 1e-9) {
    throw ValidationError("split fractions must sum to 1");
  }
}

Splits split_image_ids(std::vector<ImageId> ids, const SplitSpec& spec) {
  spec.validate();
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw ValidationError("split input contains duplicate image ids");
  }
  std::mt19937_64 gen(spec.seed);
  for (std::size_t i = ids.size(); i > 1; --i) {
    std::swap(ids[i - 1], ids[uniform_below(gen, i)]);
  }

  const std::size_t n_val = floor_share(ids.size(), spec.val);
  const std::size_t n_test = floor_share(ids.size(), spec.test);
  const std::size_t n_train = ids.size() - n_val - n_test;

  Splits s;
  const auto first = ids.begin();
  s.train.assign(first, first + n_train);
  s.val.assign(first + n_train, first + n_train + n_val);
  s.test.assign(first + n_train + n_val, ids.end());
  for (auto* part : {&s.train, &s.val, &s.test}) std::sort(part->begin(), part->end());
  return s;
}

Splits split_dataset(const io::CocoDataset& ds, const SplitSpec& spec) {
  std::vector<ImageId> ids;
  ids.reserve(ds.images.size());
  for (const auto& img : ds.images) ids.push_back(img.meta.image_id);
  return split_image_ids(std::move(ids), spec);
}

HandheldClassList class_list_from_json(const io::json& j) {
  const io::json* ids = &j;
  if (j.is_object()) {
    const auto it = j.find("class_ids");
    if (it == j.end()) throw ValidationError("class list: missing \"class_ids\"");
    ids = &*it;
  }
  if (!ids->is_array()) throw ValidationError("class list: expected an array of ids");
  HandheldClassList list;
  for (const auto& v : *ids) {
    if (!v.is_number_integer()) throw ValidationError("class list: ids must be integers");
    list.class_ids.insert(v.get<ClassId>());
  }
  if (list.class_ids.empty()) throw ValidationError("class list is empty");
  return list;
}

HandheldClassList load_class_list(const io::fs::path& path) {
  return class_list_from_json(io::read_json(path));
}

HandheldSubset handheld_subset(const io::CocoDataset& ds, const HandheldClassList& classes,
                               ClassId person_class_id) {
  if (!ds.categories.empty()) {
    std::set<ClassId> known;
    for (const auto& c : ds.categories) known.insert(c.id);
    if (!known.contains(person_class_id)) {
      throw ValidationError("person class id " + std::to_string(person_class_id) +
                            " is not a dataset category");
    }
    for (const ClassId c : classes.class_ids) {
      if (!known.contains(c)) {
        throw ValidationError("handheld class id " + std::to_string(c) +
                              " is not a dataset category");
      }
    }
  }

  std::unordered_set<ImageId> has_person;
  std::unordered_set<ImageId> has_handheld;
  for (const auto& a : ds.annotations) {
    if (a.class_id == person_class_id) has_person.insert(a.image_id);
    if (classes.class_ids.contains(a.class_id)) has_handheld.insert(a.image_id);
  }

  HandheldSubset subset;
  for (const auto& img : ds.images) {
    const ImageId id = img.meta.image_id;
    if (has_person.contains(id) && has_handheld.contains(id)) subset.image_ids.push_back(id);
  }
  std::sort(subset.image_ids.begin(), subset.image_ids.end());

  const std::unordered_set<ImageId> kept(subset.image_ids.begin(), subset.image_ids.end());
  for (const auto& a : ds.annotations) {
    if (kept.contains(a.image_id) && classes.class_ids.contains(a.class_id)) {
      subset.annotations.push_back(a);
    }
  }
  std::sort(subset.annotations.begin(), subset.annotations.end(),
            [](const auto& x, const auto& y) { return x.id < y.id; });
  return subset;
}

io::EvalSet apply_handheld_flags(const io::CocoDataset& ds, const HandheldSubset& subset,
                                 const io::HandheldFlags& flags) {
  std::unordered_set<AnnotationId> known;
  known.reserve(ds.annotations.size());
  for (const auto& a : ds.annotations) known.insert(a.id);
  std::vector<AnnotationId> dangling;
  for (const AnnotationId id : flags.handheld_annotation_ids) {
    if (!known.contains(id)) dangling.push_back(id);
  }
  if (!dangling.empty()) {
    std::string msg = "handheld flags reference unknown annotation ids:";
    for (std::size_t i = 0; i < dangling.size() && i < 20; ++i) {
      msg += " " + std::to_string(dangling[i]);
    }
    throw ValidationError(msg);
  }

  std::map<ImageId, io::EvalImage> by_image;
  std::unordered_map<ImageId, const io::CocoImage*> images;
  for (const auto& img : ds.images) images.emplace(img.meta.image_id, &img);
  for (const ImageId id : subset.image_ids) by_image[id].image = *images.at(id);

  for (const auto& a : ds.annotations) {
    const auto it = by_image.find(a.image_id);
    if (it == by_image.end()) continue;
    auto& tier = flags.handheld_annotation_ids.contains(a.id) ? it->second.handheld
                                                              : it->second.other;
    tier.push_back(a);
  }

  io::EvalSet set;
  set.categories = ds.categories;
  for (auto& [id, img] : by_image) {
    if (img.handheld.empty()) continue;
    auto by_id = [](const auto& x, const auto& y) { return x.id < y.id; };
    std::sort(img.handheld.begin(), img.handheld.end(), by_id);
    std::sort(img.other.begin(), img.other.end(), by_id);
    set.images.push_back(std::move(img));
  }
  return set;
}

io::CocoDataset restrict_to_images(const io::CocoDataset& ds,
                                   std::span<const ImageId> image_ids) {
  const std::unordered_set<ImageId> keep(image_ids.begin(), image_ids.end());
  io::CocoDataset out;
  out.header = ds.header;
  out.categories = ds.categories;
  for (const auto& img : ds.images) {
    if (keep.contains(img.meta.image_id)) out.images.push_back(img);
  }
  for (const auto& a : ds.annotations) {
    if (keep.contains(a.image_id)) out.annotations.push_back(a);
  }
  return out;
}

}  // namespace hod
