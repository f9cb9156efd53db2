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

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "hod/io.hpp"

namespace hod {

struct SplitSpec {
  double train{0.5};
  double val{0.25};
  double test{0.25};
  std::uint64_t seed{0};

  void validate() const;
};

struct Splits {
  std::vector<ImageId> train;
  std::vector<ImageId> val;
  std::vector<ImageId> test;
};

/// Seeded Fisher-Yates partition of `ids`. Validation and test sizes are
/// floor(n * fraction); the remainder goes to train. Each list is returned in
/// ascending order. Input order does not affect the result.
Splits split_image_ids(std::vector<ImageId> ids, const SplitSpec& spec);
Splits split_dataset(const io::CocoDataset& ds, const SplitSpec& spec);

struct HandheldClassList {
  std::set<ClassId> class_ids;
};

/// Accepts either a bare array of ids or {"class_ids": [...]}.
HandheldClassList class_list_from_json(const io::json& j);
HandheldClassList load_class_list(const io::fs::path& path);

struct HandheldSubset {
  std::vector<ImageId> image_ids;                 // ascending
  std::vector<io::CocoAnnotation> annotations;    // handheld-class anns of kept images
};

/// Images holding at least one person and at least one handheld-class
/// annotation.
HandheldSubset handheld_subset(const io::CocoDataset& ds, const HandheldClassList& classes,
                               ClassId person_class_id);

/// Splits each subset image's annotations into flagged (handheld) and the
/// rest, dropping images left without a handheld annotation. Flags naming an
/// annotation absent from `ds` are a ValidationError.
io::EvalSet apply_handheld_flags(const io::CocoDataset& ds, const HandheldSubset& subset,
                                 const io::HandheldFlags& flags);

/// Copy of `ds` keeping only `image_ids` and their annotations.
io::CocoDataset restrict_to_images(const io::CocoDataset& ds,
                                   std::span<const ImageId> image_ids);

}  // namespace hod
