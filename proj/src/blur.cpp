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
#include "hod/blur.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

#include "hod/error.hpp"
#include "hod/parallel.hpp"
#include "hod/random.hpp"

namespace hod {

namespace {

struct Tap {
  int dy;
  int dx;
  double w;
};

std::vector<Tap> nonzero_taps(const Eigen::MatrixXd& kernel) {
  if (kernel.rows() != kernel.cols() || kernel.rows() % 2 == 0) {
    throw ValidationError("kernel must be square with odd size");
  }
  const int r = static_cast<int>(kernel.rows() / 2);
  std::vector<Tap> taps;
  for (int y = 0; y < kernel.rows(); ++y) {
    for (int x = 0; x < kernel.cols(); ++x) {
      if (kernel(y, x) != 0.0) taps.push_back({y - r, x - r, kernel(y, x)});
    }
  }
  return taps;
}

template <typename Scalar>
Scalar bilinear(const Plane<Scalar>& src, double sx, double sy) {
  const int w = static_cast<int>(src.cols());
  const int h = static_cast<int>(src.rows());
  const double fx0 = std::floor(sx);
  const double fy0 = std::floor(sy);
  const double fx = sx - fx0;
  const double fy = sy - fy0;
  const int x0 = reflect_index(static_cast<int>(fx0), w);
  const int x1 = reflect_index(static_cast<int>(fx0) + 1, w);
  const int y0 = reflect_index(static_cast<int>(fy0), h);
  const int y1 = reflect_index(static_cast<int>(fy0) + 1, h);
  const double top = (1.0 - fx) * src(y0, x0) + fx * src(y0, x1);
  const double bot = (1.0 - fx) * src(y1, x0) + fx * src(y1, x1);
  return static_cast<Scalar>((1.0 - fy) * top + fy * bot);
}

std::array<Plane<double>, 3> split_channels(const ImageBuffer& img) {
  std::array<Plane<double>, 3> planes;
  for (auto& p : planes) p.resize(img.height, img.width);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const std::size_t base = (static_cast<std::size_t>(y) * img.width + x) * 3;
      for (int c = 0; c < 3; ++c) planes[c](y, x) = img.rgb[base + c];
    }
  }
  return planes;
}

ImageBuffer merge_channels(const std::array<Plane<double>, 3>& planes) {
  ImageBuffer img;
  img.height = static_cast<int>(planes[0].rows());
  img.width = static_cast<int>(planes[0].cols());
  img.rgb.resize(static_cast<std::size_t>(img.width) * img.height * 3);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const std::size_t base = (static_cast<std::size_t>(y) * img.width + x) * 3;
      for (int c = 0; c < 3; ++c) {
        const double v = std::clamp(planes[c](y, x), 0.0, 255.0);
        img.rgb[base + c] = static_cast<std::uint8_t>(std::lround(v));
      }
    }
  }
  return img;
}

template <typename Op>
ImageBuffer per_channel(const ImageBuffer& img, Op&& op) {
  if (!img.valid()) throw ValidationError("image buffer size does not match its dimensions");
  auto planes = split_channels(img);
  for (auto& p : planes) p = op(p);
  return merge_channels(planes);
}

bool is_image_file(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

}  // namespace

ImageBuffer ImageBuffer::filled(int width, int height, std::uint8_t r, std::uint8_t g,
                                std::uint8_t b) {
  ImageBuffer img{width, height, {}};
  img.rgb.reserve(static_cast<std::size_t>(width) * height * 3);
  for (int i = 0; i < width * height; ++i) {
    img.rgb.push_back(r);
    img.rgb.push_back(g);
    img.rgb.push_back(b);
  }
  return img;
}

int reflect_index(int i, int n) {
  if (n <= 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

Eigen::MatrixXd line_kernel(int length, double angle_rad) {
  if (length < 1) throw ValidationError("line kernel length must be at least 1");
  const int radius = (length - 1) / 2 + 1;
  const int size = 2 * radius + 1;
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(size, size);
  const Eigen::Vector2d dir(std::cos(angle_rad), std::sin(angle_rad));
  const double weight = 1.0 / length;
  for (int i = 0; i < length; ++i) {
    const double t = -0.5 * (length - 1) + i;
    const Eigen::Vector2d p = t * dir + Eigen::Vector2d::Constant(radius);
    const double x0 = std::floor(p.x());
    const double y0 = std::floor(p.y());
    const double fx = p.x() - x0;
    const double fy = p.y() - y0;
    const int cx = static_cast<int>(x0);
    const int cy = static_cast<int>(y0);
    k(cy, cx) += weight * (1.0 - fx) * (1.0 - fy);
    if (fx > 0.0) k(cy, cx + 1) += weight * fx * (1.0 - fy);
    if (fy > 0.0) k(cy + 1, cx) += weight * (1.0 - fx) * fy;
    if (fx > 0.0 && fy > 0.0) k(cy + 1, cx + 1) += weight * fx * fy;
  }
  return k;
}

template <typename Scalar>
Plane<Scalar> convolve_reflect(const Plane<Scalar>& src, const Eigen::MatrixXd& kernel) {
  const auto taps = nonzero_taps(kernel);
  const int h = static_cast<int>(src.rows());
  const int w = static_cast<int>(src.cols());
  Plane<Scalar> out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (const auto& t : taps) {
        acc += t.w * src(reflect_index(y + t.dy, h), reflect_index(x + t.dx, w));
      }
      out(y, x) = static_cast<Scalar>(acc);
    }
  }
  return out;
}

template <typename Scalar>
Plane<Scalar> rotational_average(const Plane<Scalar>& src, double max_angle_deg,
                                 int samples) {
  if (samples < 3 || samples % 2 == 0) {
    throw ValidationError("rotational blur needs an odd sample count of at least 3");
  }
  if (max_angle_deg == 0.0) return src;
  const int h = static_cast<int>(src.rows());
  const int w = static_cast<int>(src.cols());
  const Eigen::Vector2d center(0.5 * (w - 1), 0.5 * (h - 1));
  const double max_rad = max_angle_deg * std::numbers::pi / 180.0;

  Eigen::ArrayXXd acc = Eigen::ArrayXXd::Zero(h, w);
  for (int k = 0; k < samples; ++k) {
    const double theta = -max_rad + 2.0 * max_rad * k / (samples - 1);
    const Eigen::Matrix2d rot = Eigen::Rotation2Dd(theta).toRotationMatrix();
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const Eigen::Vector2d s = rot * (Eigen::Vector2d(x, y) - center) + center;
        acc(y, x) += bilinear(src, s.x(), s.y());
      }
    }
  }
  return (acc / samples).cast<Scalar>();
}

template Plane<float> convolve_reflect(const Plane<float>&, const Eigen::MatrixXd&);
template Plane<double> convolve_reflect(const Plane<double>&, const Eigen::MatrixXd&);
template Plane<float> rotational_average(const Plane<float>&, double, int);
template Plane<double> rotational_average(const Plane<double>&, double, int);

ImageBuffer linear_blur(const ImageBuffer& img, int length, double angle_rad) {
  const Eigen::MatrixXd k = line_kernel(length, angle_rad);
  return per_channel(img, [&](const Plane<double>& p) { return convolve_reflect(p, k); });
}

ImageBuffer rotational_blur(const ImageBuffer& img, double max_angle_deg, int samples) {
  return per_channel(img, [&](const Plane<double>& p) {
    return rotational_average(p, max_angle_deg, samples);
  });
}

void BlurParams::validate() const {
  if (min_length_px < 1 || max_length_px < min_length_px) {
    throw ValidationError("linear blur length range must satisfy 1 <= min <= max");
  }
  if (!(min_rot_deg >= 0.0) || !(max_rot_deg >= min_rot_deg) || !std::isfinite(max_rot_deg)) {
    throw ValidationError("rotation range must satisfy 0 <= min <= max");
  }
  if (rot_samples < 3 || rot_samples % 2 == 0) {
    throw ValidationError("rotation samples must be odd and at least 3");
  }
}

std::uint64_t image_key(std::string_view filename) {
  const auto dot = filename.find_last_of('.');
  const std::string_view stem = filename.substr(0, dot);
  if (!stem.empty() && stem.size() <= 18 &&
      std::all_of(stem.begin(), stem.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    std::uint64_t v = 0;
    std::from_chars(stem.data(), stem.data() + stem.size(), v);
    return v;
  }
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : filename) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

BlurDraw draw_blur(const BlurParams& params, std::uint64_t key) {
  std::mt19937_64 gen(mix_seed(params.seed, key));
  BlurDraw d;
  const auto span = static_cast<std::uint64_t>(params.max_length_px - params.min_length_px) + 1;
  d.length_px = params.min_length_px + static_cast<int>(uniform_below(gen, span));
  d.angle_rad = uniform01(gen) * std::numbers::pi;
  d.rot_deg = params.min_rot_deg + uniform01(gen) * (params.max_rot_deg - params.min_rot_deg);
  return d;
}

ImageBuffer apply_blur(const ImageBuffer& img, const BlurDraw& draw, int rot_samples) {
  const Eigen::MatrixXd k = line_kernel(draw.length_px, draw.angle_rad);
  return per_channel(img, [&](const Plane<double>& p) {
    return convolve_reflect(rotational_average(p, draw.rot_deg, rot_samples), k);
  });
}

AugmentReport augment_dataset(const std::filesystem::path& in_dir,
                              const std::filesystem::path& out_dir, const BlurParams& params,
                              unsigned threads) {
  namespace fs = std::filesystem;
  params.validate();
  if (!fs::is_directory(in_dir)) throw IoError(in_dir.string() + " is not a directory");
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  AugmentReport report;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in_dir)) {
    if (!entry.is_regular_file()) continue;
    if (is_image_file(entry.path())) {
      files.push_back(entry.path());
    } else {
      report.warnings.push_back(entry.path().filename().string() + ": not a PNG/JPEG, skipped");
    }
  }
  std::sort(files.begin(), files.end());
  std::sort(report.warnings.begin(), report.warnings.end());

  std::vector<std::optional<AugmentedImage>> done(files.size());
  parallel_for(files.size(), threads, [&](std::size_t i) {
    const auto img = read_image(files[i]);
    if (!img) return;
    const std::string name = files[i].filename().string();
    const BlurDraw draw = draw_blur(params, image_key(name));
    write_image(out_dir / name, apply_blur(*img, draw, params.rot_samples));
    done[i] = AugmentedImage{name, draw};
  });
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (done[i]) {
      report.images.push_back(*done[i]);
    } else {
      report.warnings.push_back(files[i].filename().string() + ": cannot decode, skipped");
    }
  }
  return report;
}

}  // namespace hod
