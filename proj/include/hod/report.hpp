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
#include <vector>

#include "hod/blur.hpp"
#include "hod/eval.hpp"
#include "hod/io.hpp"
#include "hod/pipeline.hpp"

namespace hod::report {

/// Per-image audit trail of a filtering run.
io::json decision_log(const DatasetRun& run, const FilterConfig& cfg);

/// Columns: confidence, tp, fp, fn, ignored, precision, recall.
std::string pr_csv(const SweepResult& sweep);

io::json ratios_json(const FilteredRatios& r);

struct Curve {
  std::string label;
  const SweepResult* sweep{nullptr};
};

/// Recall-precision plot over [0,1]^2, one polyline per curve.
std::string pr_svg(std::span<const Curve> curves);

io::json augment_json(const AugmentReport& report, const BlurParams& params);

/// Shortest round-trip decimal form of `v`.
std::string format_number(double v);

}  // namespace hod::report
