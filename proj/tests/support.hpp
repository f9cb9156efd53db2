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

// Helpers and brute-force oracles shared by the unit tests and the
// acceptance runner. The oracles deliberately avoid the library's geometry
// and matching code.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hod/aoi.hpp"
#include "hod/eval.hpp"
#include "hod/filter.hpp"
#include "hod/io.hpp"
#include "hod/types.hpp"

namespace hod::test {

struct KeypointSpec {
  Joint joint;
  double x;
  double y;
  double conf{1.0};
};

inline PersonPose make_pose(std::initializer_list<KeypointSpec> kps, bool bottom_up = false) {
  PersonPose p;
  p.bottom_up = bottom_up;
  for (const auto& k : kps) p[k.joint] = Keypoint{Point2d(k.x, k.y), k.conf};
  return p;
}

inline Detection det(double x, double y, double w, double h, double score, ClassId cls = 1,
                     ImageId image = 1) {
  return Detection{image, cls, BBox{x, y, w, h}, score};
}

inline io::CocoAnnotation ann(AnnotationId id, double x, double y, double w, double h,
                              ClassId cls = 1, ImageId image = 1) {
  io::CocoAnnotation a;
  a.id = id;
  a.image_id = image;
  a.class_id = cls;
  a.bbox = BBox{x, y, w, h};
  return a;
}

inline AreaOfInterest aoi_at(double cx, double cy, double half, ImageId image = 1) {
  AreaOfInterest a;
  a.image_id = image;
  a.center = Point2d(cx, cy);
  a.half_extent = half;
  return a;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::uint64_t counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("hod-" + tag + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// ---------------------------------------------------------------------------
// Filter oracle: keep iff score >= upper, or some AOI both covers at least
// overlap_frac of the detection and is wide enough for the size cap.

inline bool oracle_keep(const Detection& d, const std::vector<AreaOfInterest>& aois,
                        double upper, double frac, double cap) {
  if (d.score >= upper) return true;
  const double dx0 = d.bbox.x;
  const double dy0 = d.bbox.y;
  const double dx1 = d.bbox.x + d.bbox.w;
  const double dy1 = d.bbox.y + d.bbox.h;
  const double area = d.bbox.w * d.bbox.h;
  const double longest = d.bbox.w > d.bbox.h ? d.bbox.w : d.bbox.h;
  for (const auto& a : aois) {
    const double ax0 = a.center.x() - a.half_extent;
    const double ay0 = a.center.y() - a.half_extent;
    const double ax1 = a.center.x() + a.half_extent;
    const double ay1 = a.center.y() + a.half_extent;
    const double ix = std::min(dx1, ax1) - std::max(dx0, ax0);
    const double iy = std::min(dy1, ay1) - std::max(dy0, ay0);
    const double inter = (ix > 0 && iy > 0) ? ix * iy : 0.0;
    const double covered = area > 0 ? inter / area : 0.0;
    if (covered >= frac && longest <= cap * (2 * a.half_extent)) return true;
  }
  return false;
}

struct FilterInstance {
  std::vector<Detection> dets;
  std::vector<AreaOfInterest> aois;
  FilterConfig cfg;
};

/// Coordinates on a half-pixel grid so that boundary ties actually occur.
inline FilterInstance random_filter_instance(std::mt19937_64& gen) {
  auto uni = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  };
  auto grid = [&](int lo, int hi) {
    return 0.5 * std::uniform_int_distribution<int>(2 * lo, 2 * hi)(gen);
  };
  auto pick = [&](std::initializer_list<double> vs) {
    std::vector<double> v(vs);
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(gen)];
  };
  FilterInstance inst;
  const int n_det = std::uniform_int_distribution<int>(0, 6)(gen);
  const int n_aoi = std::uniform_int_distribution<int>(0, 4)(gen);
  for (int i = 0; i < n_det; ++i) {
    const double score = (gen() % 4 == 0) ? pick({0.0, 0.5, 0.7, 1.0}) : uni(0.0, 1.0);
    inst.dets.push_back(det(grid(0, 60), grid(0, 60), grid(0, 40), grid(0, 40), score));
  }
  for (int i = 0; i < n_aoi; ++i) {
    inst.aois.push_back(aoi_at(grid(0, 80), grid(0, 80), grid(1, 20)));
  }
  inst.cfg.upper_conf = (gen() % 3 == 0) ? pick({0.0, 0.5, 0.7, 1.0, 1.1}) : uni(0.0, 1.2);
  inst.cfg.overlap_frac = (gen() % 3 == 0) ? pick({0.0, 0.25, 0.5, 1.0}) : uni(0.0, 1.0);
  inst.cfg.size_cap_multiplier = (gen() % 3 == 0) ? pick({0.5, 1.0, 2.5}) : uni(0.1, 4.0);
  return inst;
}

inline std::vector<bool> kept_mask(const std::vector<FilterDecision>& ds) {
  std::vector<bool> m;
  for (const auto& d : ds) m.push_back(d.kept);
  return m;
}

// ---------------------------------------------------------------------------
// Matching oracle: exhaustive search over one-to-one assignments, maximizing
// TPs first and then ignored matches.

inline double oracle_iou(const BBox& a, const BBox& b) {
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  const double uni = a.w * a.h + b.w * b.h - inter;
  return uni > 0 ? inter / uni : 0.0;
}

inline std::pair<std::size_t, std::size_t> exhaustive_best(
    const std::vector<Detection>& dets, const std::vector<io::CocoAnnotation>& handheld,
    const std::vector<io::CocoAnnotation>& other, double thr) {
  std::vector<const io::CocoAnnotation*> all;
  for (const auto& a : handheld) all.push_back(&a);
  for (const auto& a : other) all.push_back(&a);
  std::vector<bool> used(all.size(), false);
  std::pair<std::size_t, std::size_t> best{0, 0};
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t k,
                                                                       std::size_t tp,
                                                                       std::size_t ig) {
    if (k == dets.size()) {
      best = std::max(best, std::make_pair(tp, ig));
      return;
    }
    rec(k + 1, tp, ig);
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (used[j] || all[j]->class_id != dets[k].class_id) continue;
      if (oracle_iou(dets[k].bbox, all[j]->bbox) < thr) continue;
      used[j] = true;
      if (j < handheld.size()) {
        rec(k + 1, tp + 1, ig);
      } else {
        rec(k + 1, tp, ig + 1);
      }
      used[j] = false;
    }
  };
  rec(0, 0, 0);
  return best;
}

struct MatchInstance {
  std::vector<Detection> dets;
  std::vector<io::CocoAnnotation> handheld;
  std::vector<io::CocoAnnotation> other;
};

inline MatchInstance random_match_instance(std::mt19937_64& gen, int max_dets, int max_anns,
                                           int grid) {
  auto coord = [&] { return std::uniform_int_distribution<int>(0, grid - 1)(gen); };
  auto box = [&] {
    const int x = coord();
    const int y = coord();
    const int w = std::uniform_int_distribution<int>(1, grid - x)(gen);
    const int h = std::uniform_int_distribution<int>(1, grid - y)(gen);
    return BBox{double(x), double(y), double(w), double(h)};
  };
  MatchInstance m;
  const int nd = std::uniform_int_distribution<int>(0, max_dets)(gen);
  const int na = std::uniform_int_distribution<int>(0, max_anns)(gen);
  for (int i = 0; i < nd; ++i) {
    const BBox b = box();
    const double score = 0.05 * std::uniform_int_distribution<int>(0, 20)(gen);
    const ClassId cls = 1 + static_cast<ClassId>(gen() % 2);
    m.dets.push_back(Detection{1, cls, b, score});
  }
  for (int i = 0; i < na; ++i) {
    const BBox b = box();
    auto a = ann(i + 1, b.x, b.y, b.w, b.h, 1 + static_cast<ClassId>(gen() % 2));
    (gen() % 3 == 0 ? m.other : m.handheld).push_back(a);
  }
  return m;
}

/// True when every detection/annotation IoU is exactly 0 or strictly above
/// `thr`, the class on which greedy matching is optimal.
inline bool iou_gap_instance(const MatchInstance& m, double thr) {
  auto ok = [&](const std::vector<io::CocoAnnotation>& anns) {
    for (const auto& d : m.dets) {
      for (const auto& a : anns) {
        const double v = oracle_iou(d.bbox, a.bbox);
        if (v > 0.0 && v <= thr) return false;
      }
    }
    return true;
  };
  return ok(m.handheld) && ok(m.other);
}

// ---------------------------------------------------------------------------

inline io::EvalSet eval_set_of(std::initializer_list<io::EvalImage> images) {
  io::EvalSet s;
  for (const auto& img : images) s.images.push_back(img);
  std::sort(s.images.begin(), s.images.end(), [](const auto& a, const auto& b) {
    return a.image.meta.image_id < b.image.meta.image_id;
  });
  return s;
}

inline io::EvalImage eval_image(ImageId id, std::vector<io::CocoAnnotation> handheld,
                                std::vector<io::CocoAnnotation> other = {}, int w = 640,
                                int h = 480) {
  io::EvalImage img;
  img.image.meta = ImageMeta{id, w, h};
  for (auto& a : handheld) a.image_id = id;
  for (auto& a : other) a.image_id = id;
  img.handheld = std::move(handheld);
  img.other = std::move(other);
  return img;
}

}  // namespace hod::test
