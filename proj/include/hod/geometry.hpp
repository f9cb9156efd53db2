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

#include <algorithm>

#include <Eigen/Core>

namespace hod {

/// Absolute tolerance for geometric comparisons.
inline constexpr double kGeomTolerance = 1e-9;

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point2d = Point2<double>;

/// Axis-aligned box in COCO convention: (left, top, width, height) in
/// continuous pixel coordinates.
template <typename Scalar>
struct Box {
  Scalar x{0};
  Scalar y{0};
  Scalar w{0};
  Scalar h{0};

  Scalar right() const { return x + w; }
  Scalar bottom() const { return y + h; }
  Scalar area() const { return w * h; }
  Scalar max_side() const { return std::max(w, h); }
  Point2<Scalar> center() const {
    return {x + w / Scalar(2), y + h / Scalar(2)};
  }
  bool valid() const { return w >= Scalar(0) && h >= Scalar(0); }

  /// Square of side 2*half centered on `c`.
  static Box centered(const Point2<Scalar>& c, Scalar half) {
    return {c.x() - half, c.y() - half, Scalar(2) * half, Scalar(2) * half};
  }

  friend bool operator==(const Box&, const Box&) = default;
};

using BBox = Box<double>;

template <typename Scalar>
Scalar intersection_area(const Box<Scalar>& a, const Box<Scalar>& b) {
  const Scalar iw = std::min(a.right(), b.right()) - std::max(a.x, b.x);
  const Scalar ih = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
  if (iw <= Scalar(0) || ih <= Scalar(0)) return Scalar(0);
  return iw * ih;
}

/// Intersection over union; 0 for disjoint boxes and for a degenerate pair.
template <typename Scalar>
Scalar iou(const Box<Scalar>& a, const Box<Scalar>& b) {
  const Scalar inter = intersection_area(a, b);
  const Scalar uni = a.area() + b.area() - inter;
  if (uni <= Scalar(0)) return Scalar(0);
  return std::clamp(inter / uni, Scalar(0), Scalar(1));
}

/// Fraction of `det`'s own area covered by `aoi`. A zero-area `det` yields 0.
template <typename Scalar>
Scalar overlap_fraction(const Box<Scalar>& det, const Box<Scalar>& aoi) {
  const Scalar area = det.area();
  if (area <= Scalar(0)) return Scalar(0);
  return std::clamp(intersection_area(det, aoi) / area, Scalar(0), Scalar(1));
}

}  // namespace hod
