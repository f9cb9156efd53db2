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
#include "hod/report.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace hod::report {

namespace {

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c",
                                              "#ff7f0e", "#9467bd", "#8c564b"};

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

io::json tally_json(const Tally& t) {
  return {{"tp", t.tp}, {"fp", t.fp}, {"fn", t.fn}, {"ignored", t.ignored}};
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

io::json decision_log(const DatasetRun& run, const FilterConfig& cfg) {
  io::json images = io::json::array();
  std::size_t n_in = 0;
  std::size_t n_kept = 0;
  for (const auto& img : run.images) {
    io::json decisions = io::json::array();
    for (const auto& d : img.decisions) {
      decisions.push_back({{"category_id", d.detection.class_id},
                           {"bbox", {d.detection.bbox.x, d.detection.bbox.y,
                                     d.detection.bbox.w, d.detection.bbox.h}},
                           {"score", d.detection.score},
                           {"kept", d.kept},
                           {"reason", std::string(to_string(d.reason))}});
      n_kept += d.kept ? 1 : 0;
    }
    n_in += img.decisions.size();
    images.push_back({{"image_id", img.image_id},
                      {"aoi_count", img.aois.size()},
                      {"aois_generated", img.aois_generated},
                      {"short_circuit", img.short_circuit},
                      {"detections_consulted", img.detections_consulted},
                      {"decisions", std::move(decisions)}});
  }
  return {{"mode", std::string(to_string(run.mode))},
          {"config",
           {{"upper_conf", cfg.upper_conf},
            {"overlap_frac", cfg.overlap_frac},
            {"size_cap_multiplier", cfg.size_cap_multiplier}}},
          {"summary",
           {{"images", run.images.size()},
            {"images_consulted", run.images_consulted()},
            {"decisions", n_in},
            {"kept", n_kept}}},
          {"warnings", run.warnings},
          {"images", std::move(images)}};
}

std::string pr_csv(const SweepResult& sweep) {
  std::ostringstream os;
  os << "confidence,tp,fp,fn,ignored,precision,recall\n";
  for (const auto& p : sweep.points) {
    os << format_number(p.confidence) << ',' << p.counts.tp << ',' << p.counts.fp << ','
       << p.counts.fn << ',' << p.counts.ignored << ',' << format_number(p.precision) << ','
       << format_number(p.recall) << '\n';
  }
  return os.str();
}

io::json ratios_json(const FilteredRatios& r) {
  return {{"base_conf", r.base_conf},
          {"baseline", tally_json(r.baseline)},
          {"pipeline", tally_json(r.pipeline)},
          {"tp_filtered", r.tp_filtered},
          {"fp_filtered", r.fp_filtered},
          {"tp_filtered_undefined", r.tp_undefined},
          {"fp_filtered_undefined", r.fp_undefined}};
}

std::string pr_svg(std::span<const Curve> curves) {
  constexpr double kLeft = 60, kTop = 20, kSize = 400;
  auto px = [&](double recall) { return fixed2(kLeft + recall * kSize); };
  auto py = [&](double precision) { return fixed2(kTop + (1.0 - precision) * kSize); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
        "viewBox=\"0 0 640 480\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kSize << "\" height=\""
     << kSize << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    os << "<line x1=\"" << px(v) << "\" y1=\"" << py(0) << "\" x2=\"" << px(v) << "\" y2=\""
       << fixed2(kTop + kSize + 5) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(v) << "\" y=\"" << fixed2(kTop + kSize + 18)
       << "\" text-anchor=\"middle\">" << fixed2(v) << "</text>\n";
    os << "<line x1=\"" << fixed2(kLeft - 5) << "\" y1=\"" << py(v) << "\" x2=\"" << px(0)
       << "\" y2=\"" << py(v) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(kTop + (1 - v) * kSize + 4)
       << "\" text-anchor=\"end\">" << fixed2(v) << "</text>\n";
  }
  os << "<text x=\"" << fixed2(kLeft + kSize / 2) << "\" y=\"" << fixed2(kTop + kSize + 38)
     << "\" text-anchor=\"middle\">Recall</text>\n";
  os << "<text x=\"15\" y=\"" << fixed2(kTop + kSize / 2) << "\" text-anchor=\"middle\" "
     << "transform=\"rotate(-90 15 " << fixed2(kTop + kSize / 2) << ")\">Precision</text>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const char* color = kPalette[c % kPalette.size()];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    const auto& pts = curves[c].sweep->points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      os << (i ? " " : "") << px(pts[i].recall) << ',' << py(pts[i].precision);
    }
    os << "\"/>\n";
    const double ly = kTop + 10 + 18.0 * static_cast<double>(c);
    os << "<line x1=\"475\" y1=\"" << fixed2(ly) << "\" x2=\"495\" y2=\"" << fixed2(ly)
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"500\" y=\"" << fixed2(ly + 4) << "\">" << xml_escape(curves[c].label)
       << " (AP " << fixed2(curves[c].sweep->ap) << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

io::json augment_json(const AugmentReport& report, const BlurParams& params) {
  io::json images = io::json::array();
  for (const auto& img : report.images) {
    images.push_back({{"file", img.filename},
                      {"linear_length_px", img.draw.length_px},
                      {"linear_angle_rad", img.draw.angle_rad},
                      {"rot_max_deg", img.draw.rot_deg}});
  }
  return {{"params",
           {{"linear_length_px", {params.min_length_px, params.max_length_px}},
            {"rot_deg", {params.min_rot_deg, params.max_rot_deg}},
            {"rot_samples", params.rot_samples},
            {"seed", params.seed},
            {"order", "rotational,linear"}}},
          {"images", std::move(images)},
          {"warnings", report.warnings}};
}

}  // namespace hod::report
