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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace hod {

/// Interleaved 8-bit RGB image.
struct ImageBuffer {
  int width{0};
  int height{0};
  std::vector<std::uint8_t> rgb;

  bool valid() const {
    return width > 0 && height > 0 &&
           rgb.size() == static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3;
  }
  static ImageBuffer filled(int width, int height, std::uint8_t r, std::uint8_t g,
                            std::uint8_t b);

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;
};

/// Single-channel image, row = y.
template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Reflect-101 border mapping of index `i` into [0, n).
int reflect_index(int i, int n);

/// Normalized 1-pixel-wide line of `length` samples through the kernel
/// center at `angle_rad`, each sample splatted bilinearly. Square, odd size.
Eigen::MatrixXd line_kernel(int length, double angle_rad);

/// Correlates `src` with a centered odd-sized kernel, reflect-101 borders.
template <typename Scalar>
Plane<Scalar> convolve_reflect(const Plane<Scalar>& src, const Eigen::MatrixXd& kernel);

/// Mean of `samples` copies of `src` rotated about the image center by equally
/// spaced angles in [-max_angle_deg, +max_angle_deg]; bilinear sampling with
/// reflect-101 borders.
template <typename Scalar>
Plane<Scalar> rotational_average(const Plane<Scalar>& src, double max_angle_deg, int samples);

ImageBuffer linear_blur(const ImageBuffer& img, int length, double angle_rad);
ImageBuffer rotational_blur(const ImageBuffer& img, double max_angle_deg, int samples);

struct BlurParams {
  int min_length_px{5};
  int max_length_px{25};
  double min_rot_deg{1.0};
  double max_rot_deg{5.0};
  int rot_samples{9};
  std::uint64_t seed{0};

  void validate() const;
};

/// Parameters drawn for one image.
struct BlurDraw {
  int length_px{1};
  double angle_rad{0.0};
  double rot_deg{0.0};
};

/// Numeric file stems ("000000139.jpg") map to their value; anything else to
/// the FNV-1a hash of the file name.
std::uint64_t image_key(std::string_view filename);

BlurDraw draw_blur(const BlurParams& params, std::uint64_t image_key);

/// Rotational blur followed by linear blur.
ImageBuffer apply_blur(const ImageBuffer& img, const BlurDraw& draw, int rot_samples);

/// Decodes PNG/JPEG into RGB; nullopt when the file cannot be decoded.
std::optional<ImageBuffer> read_image(const std::filesystem::path& path);
/// Encodes by extension (.png, .jpg/.jpeg at fixed quality 95).
void write_image(const std::filesystem::path& path, const ImageBuffer& img);

struct AugmentedImage {
  std::string filename;
  BlurDraw draw;
};

struct AugmentReport {
  std::vector<AugmentedImage> images;  // by file name
  std::vector<std::string> warnings;
};

/// Blurs every .png/.jpg/.jpeg in `in_dir` (non-recursive) into `out_dir`
/// under the same name. Undecodable files are skipped with a warning.
AugmentReport augment_dataset(const std::filesystem::path& in_dir,
                              const std::filesystem::path& out_dir, const BlurParams& params,
                              unsigned threads = 1);

}  // namespace hod
