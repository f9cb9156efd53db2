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
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "hod/blur.hpp"
#include "hod/error.hpp"

namespace hod {

std::optional<ImageBuffer> read_image(const std::filesystem::path& path) {
  cv::Mat bgr;
  try {
    bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  } catch (const cv::Exception&) {
    return std::nullopt;
  }
  if (bgr.empty() || bgr.type() != CV_8UC3) return std::nullopt;

  ImageBuffer img{bgr.cols, bgr.rows, {}};
  img.rgb.resize(static_cast<std::size_t>(img.width) * img.height * 3);
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      const std::size_t base = (static_cast<std::size_t>(y) * img.width + x) * 3;
      img.rgb[base] = row[x][2];
      img.rgb[base + 1] = row[x][1];
      img.rgb[base + 2] = row[x][0];
    }
  }
  return img;
}

void write_image(const std::filesystem::path& path, const ImageBuffer& img) {
  if (!img.valid()) throw ValidationError("image buffer size does not match its dimensions");
  cv::Mat bgr(img.height, img.width, CV_8UC3);
  for (int y = 0; y < img.height; ++y) {
    auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.width; ++x) {
      const std::size_t base = (static_cast<std::size_t>(y) * img.width + x) * 3;
      row[x] = cv::Vec3b(img.rgb[base + 2], img.rgb[base + 1], img.rgb[base]);
    }
  }
  const std::vector<int> params{cv::IMWRITE_JPEG_QUALITY, 95};
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), bgr, params);
  } catch (const cv::Exception& e) {
    throw IoError("cannot encode " + path.string() + ": " + e.what());
  }
  if (!ok) throw IoError("cannot write " + path.string());
}

}  // namespace hod
