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
#include "hod/cli.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hod/blur.hpp"
#include "hod/dataset.hpp"
#include "hod/error.hpp"
#include "hod/eval.hpp"
#include "hod/io.hpp"
#include "hod/manifest.hpp"
#include "hod/parallel.hpp"
#include "hod/pipeline.hpp"
#include "hod/report.hpp"

#ifndef HOD_VERSION
#define HOD_VERSION "0.0.0"
#endif

namespace hod::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

/// Reads option defaults from JSON. Nested objects address subcommands:
/// {"threads": 2, "filter": {"upper": 0.7}}.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool,
                        std::string) const override {
    return snapshot(app, default_also).dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::ostringstream ss;
    ss << input.rdbuf();
    json j;
    try {
      j = json::parse(ss.str());
    } catch (const json::parse_error& e) {
      throw CLI::ConversionError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

 private:
  static json snapshot(const CLI::App* app, bool default_also) {
    json j = json::object();
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string& name = opt->get_lnames()[0];
      if (opt->count() > 0) {
        j[name] = opt->results().size() == 1 ? json(opt->results()[0]) : json(opt->results());
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    for (const CLI::App* sub : app->get_subcommands({})) {
      j[sub->get_name()] = snapshot(sub, default_also);
    }
    return j;
  }

  static std::string scalar(const json& v, const std::string& name) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("config value for " + name + " must be a scalar or array");
  }

  static void flatten(const json& j, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object()) {
        auto sub = parents;
        sub.push_back(it.key());
        flatten(*it, sub, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = it.key();
      if (it->is_array()) {
        for (const auto& v : *it) item.inputs.push_back(scalar(v, it.key()));
      } else {
        item.inputs.push_back(scalar(*it, it.key()));
      }
      items.push_back(std::move(item));
    }
  }
};

struct GlobalOptions {
  unsigned threads{1};
};

struct BuildSubsetOptions {
  std::string coco;
  std::string classes;
  ClassId person_id{1};
  std::vector<double> splits;
  std::uint64_t seed{0};
  std::string flags;
  std::string subset_from{"all"};
  std::string out;
};

struct BlurOptions {
  std::string images;
  std::string out;
  std::uint64_t seed{0};
  std::vector<int> linear_len{5, 25};
  std::vector<double> rot_deg{1.0, 5.0};
  int rot_samples{9};
};

struct AoiOptions {
  std::string poses;
  std::string meta;
  std::string consts;
  double kp_threshold{kDefaultKeypointThreshold};
  std::string out;
};

struct FilterOptions {
  std::string detections;
  std::string aoi;
  double upper{0.7};
  double overlap{0.25};
  double cap{2.5};
  std::string mode{"auto"};
  std::string out;
  std::string decisions_out;
};

struct RunOptions {
  std::string detections;
  std::string poses;
  std::string meta;
  std::string consts;
  int pose_threshold{3};
  double kp_threshold{kDefaultKeypointThreshold};
  double upper{0.7};
  double overlap{0.25};
  double cap{2.5};
  bool deblur{false};
  std::string out;
  std::string decisions_out;
  std::string aoi_out;
};

struct EvalOptions {
  std::string detections;
  std::string eval_set;
  double iou{0.5};
  double step{0.05};
  std::string baseline;
  double base_conf{0.001};
  std::string label{"pipeline"};
  std::string baseline_label{"baseline"};
  std::string out_prefix;
};

void warn(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

void ensure_parent(const fs::path& p) {
  const fs::path parent = p.parent_path();
  if (parent.empty()) return;
  std::error_code ec;
  fs::create_directories(parent, ec);
  if (ec) throw IoError("cannot create " + parent.string() + ": " + ec.message());
}

void ensure_dir(const fs::path& p) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw IoError("cannot create " + p.string() + ": " + ec.message());
}

fs::path sibling_manifest(const fs::path& output) {
  fs::path m = output;
  m += ".manifest.json";
  return m;
}

void finish(RunManifest& m, const fs::path& where) {
  ensure_parent(where);
  write_manifest(m, HOD_VERSION, where);
}

FilterConfig filter_config(double upper, double overlap, double cap) {
  FilterConfig cfg{upper, overlap, cap};
  cfg.validate();
  return cfg;
}

json filter_config_json(const FilterConfig& cfg) {
  return {{"upper_conf", cfg.upper_conf},
          {"overlap_frac", cfg.overlap_frac},
          {"size_cap_multiplier", cfg.size_cap_multiplier}};
}

void check_kp_threshold(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("--kp-threshold must lie in [0, 1]");
}

// build-subset ------------------------------------------------------------

int cmd_build_subset(const BuildSubsetOptions& o) {
  const io::CocoDataset ds = io::load_coco(o.coco);
  const HandheldClassList classes = load_class_list(o.classes);
  const fs::path out(o.out);
  ensure_dir(out);

  RunManifest m;
  m.command = "build-subset";
  m.inputs = {o.coco, o.classes};
  m.seeds = {{"split_seed", o.seed}};
  m.config = {{"person_id", o.person_id},
              {"subset_from", o.subset_from},
              {"class_ids", classes.class_ids}};

  std::optional<Splits> splits;
  if (!o.splits.empty()) {
    if (o.splits.size() != 3) throw ValidationError("--splits takes three fractions");
    SplitSpec spec{o.splits[0], o.splits[1], o.splits[2], o.seed};
    splits = split_dataset(ds, spec);
    m.config["splits"] = o.splits;
    const std::pair<const char*, const std::vector<ImageId>*> parts[] = {
        {"train.json", &splits->train}, {"val.json", &splits->val}, {"test.json", &splits->test}};
    for (const auto& [name, ids] : parts) {
      io::save_coco(restrict_to_images(ds, *ids), out / name);
      m.outputs.push_back(out / name);
    }
    std::cout << "splits: train " << splits->train.size() << ", val " << splits->val.size()
              << ", test " << splits->test.size() << '\n';
  }

  const io::CocoDataset* source = &ds;
  io::CocoDataset restricted;
  if (o.subset_from != "all") {
    if (!splits) throw ValidationError("--subset-from " + o.subset_from + " requires --splits");
    const auto& ids = o.subset_from == "train" ? splits->train
                      : o.subset_from == "val" ? splits->val
                                               : splits->test;
    restricted = restrict_to_images(ds, ids);
    source = &restricted;
  }

  const HandheldSubset subset = handheld_subset(*source, classes, o.person_id);
  io::CocoDataset candidates = restrict_to_images(*source, subset.image_ids);
  candidates.annotations = subset.annotations;
  io::save_coco(candidates, out / "handheld_candidates.json");
  m.outputs.push_back(out / "handheld_candidates.json");
  std::cout << "handheld candidates: " << subset.image_ids.size() << " images, "
            << subset.annotations.size() << " annotations\n";

  if (!o.flags.empty()) {
    const io::HandheldFlags flags = io::load_flags(o.flags);
    m.inputs.push_back(o.flags);
    const io::EvalSet set = apply_handheld_flags(*source, subset, flags);
    io::HandheldFlags used;
    for (const auto& img : set.images) {
      for (const auto& a : img.handheld) used.handheld_annotation_ids.insert(a.id);
    }
    io::save_eval_set(set, out / "eval_set.json");
    io::save_flags(used, out / "handheld_flags.json");
    m.outputs.push_back(out / "eval_set.json");
    m.outputs.push_back(out / "handheld_flags.json");
    std::cout << "evaluation set: " << set.images.size() << " images, "
              << set.handheld_count() << " handheld annotations\n";
  }

  finish(m, out / "manifest.json");
  return kExitOk;
}

// blur ----------------------------------------------------------------------

int cmd_blur(const BlurOptions& o, const GlobalOptions& g) {
  if (o.linear_len.size() != 2) throw ValidationError("--linear-len takes MIN,MAX");
  if (o.rot_deg.size() != 2) throw ValidationError("--rot-deg takes MIN,MAX");
  BlurParams params;
  params.min_length_px = o.linear_len[0];
  params.max_length_px = o.linear_len[1];
  params.min_rot_deg = o.rot_deg[0];
  params.max_rot_deg = o.rot_deg[1];
  params.rot_samples = o.rot_samples;
  params.seed = o.seed;
  params.validate();

  const fs::path in(o.images);
  const fs::path out(o.out);
  if (fs::exists(in) && fs::exists(out) && fs::equivalent(in, out)) {
    throw ValidationError("--out must differ from --images");
  }
  const AugmentReport report = augment_dataset(in, out, params, g.threads);
  for (const auto& w : report.warnings) warn(w);
  io::write_text_atomic(out / "blur_params.json",
                        io::dump(report::augment_json(report, params)));

  RunManifest m;
  m.command = "blur";
  m.seeds = {{"blur_seed", o.seed}};
  m.config = {{"linear_len", o.linear_len},
              {"rot_deg", o.rot_deg},
              {"rot_samples", o.rot_samples}};
  for (const auto& img : report.images) {
    m.inputs.push_back(in / img.filename);
    m.outputs.push_back(out / img.filename);
  }
  m.outputs.push_back(out / "blur_params.json");
  finish(m, out / "manifest.json");
  std::cout << "blurred " << report.images.size() << " images, skipped "
            << report.warnings.size() << '\n';
  return kExitOk;
}

// aoi -----------------------------------------------------------------------

int cmd_aoi(const AoiOptions& o, const GlobalOptions& g) {
  check_kp_threshold(o.kp_threshold);
  const io::PoseFile poses = io::load_poses(o.poses);
  const io::CocoDataset meta = io::load_coco(o.meta);
  AnthropometricConstants consts;
  if (!o.consts.empty()) consts = io::load_constants(o.consts);

  std::map<ImageId, ImageMeta> metas;
  for (const auto& img : meta.images) metas.emplace(img.meta.image_id, img.meta);
  std::vector<const io::PoseEntry*> entries;
  for (const auto& e : poses.entries) {
    if (!metas.contains(e.image_id)) {
      throw ValidationError("pose entry for image " + std::to_string(e.image_id) +
                            " has no image metadata");
    }
    entries.push_back(&e);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto* a, const auto* b) { return a->image_id < b->image_id; });

  std::vector<std::vector<AreaOfInterest>> per_image(entries.size());
  parallel_for(entries.size(), g.threads, [&](std::size_t i) {
    per_image[i] = generate_aois(entries[i]->poses, metas.at(entries[i]->image_id), consts,
                                 o.kp_threshold);
  });
  std::vector<AreaOfInterest> aois;
  for (auto& v : per_image) aois.insert(aois.end(), v.begin(), v.end());

  const fs::path out(o.out);
  ensure_parent(out);
  io::save_aois(aois, out);

  RunManifest m;
  m.command = "aoi";
  m.inputs = {o.poses, o.meta};
  if (!o.consts.empty()) m.inputs.push_back(o.consts);
  m.outputs = {out};
  m.config = {{"constants", io::to_json(consts)}, {"kp_threshold", o.kp_threshold}};
  finish(m, sibling_manifest(out));
  std::cout << aois.size() << " areas of interest over " << entries.size() << " images\n";
  return kExitOk;
}

// filter / run ----------------------------------------------------------------

void write_filter_outputs(const DatasetRun& run, const FilterConfig& cfg, const fs::path& out,
                          const std::string& decisions_out, RunManifest& m) {
  const std::vector<Detection> kept = run.kept();
  ensure_parent(out);
  io::save_detections(kept, out);
  m.outputs.push_back(out);
  if (!decisions_out.empty()) {
    const fs::path d(decisions_out);
    ensure_parent(d);
    io::write_text_atomic(d, io::dump(report::decision_log(run, cfg)));
    m.outputs.push_back(d);
  }
  for (const auto& w : run.warnings) warn(w);
  std::cout << "mode " << to_string(run.mode) << ": kept " << kept.size() << " detections over "
            << run.images.size() << " images (" << run.images_consulted()
            << " consulted the detector)\n";
}

int cmd_filter(const FilterOptions& o, const GlobalOptions& g) {
  const FilterConfig cfg = filter_config(o.upper, o.overlap, o.cap);
  if (o.mode == "upper" && !cfg.bypass_enabled()) {
    throw ValidationError("--mode upper requires --upper <= 1");
  }
  if (o.mode == "no-upper" && cfg.bypass_enabled()) {
    throw ValidationError("--mode no-upper requires --upper > 1 (e.g. 1.1)");
  }
  const auto dets = io::load_detections(o.detections);
  const auto aois = io::load_aois(o.aoi);
  const DatasetRun run = filter_dataset(dets, aois, cfg, g.threads);

  RunManifest m;
  m.command = "filter";
  m.inputs = {o.detections, o.aoi};
  m.config = filter_config_json(cfg);
  m.config["mode"] = std::string(to_string(run.mode));
  write_filter_outputs(run, cfg, o.out, o.decisions_out, m);
  finish(m, sibling_manifest(o.out));
  return kExitOk;
}

int cmd_run(const RunOptions& o, const GlobalOptions& g) {
  PipelineConfig cfg;
  cfg.filter = filter_config(o.upper, o.overlap, o.cap);
  cfg.pose_person_threshold = o.pose_threshold;
  cfg.keypoint_conf_threshold = o.kp_threshold;
  cfg.deblur_enabled = o.deblur;
  if (!o.consts.empty()) cfg.consts = io::load_constants(o.consts);
  cfg.validate();

  const auto dets = io::load_detections(o.detections);
  const auto poses = io::load_poses(o.poses);
  const auto meta = io::load_coco(o.meta);
  const DatasetRun run = run_dataset(dets, poses, meta.image_metas(), cfg, g.threads);

  RunManifest m;
  m.command = "run";
  m.inputs = {o.detections, o.poses, o.meta};
  if (!o.consts.empty()) m.inputs.push_back(o.consts);
  m.config = filter_config_json(cfg.filter);
  m.config["mode"] = std::string(to_string(run.mode));
  m.config["pose_person_threshold"] = cfg.pose_person_threshold;
  m.config["kp_threshold"] = cfg.keypoint_conf_threshold;
  m.config["deblur_enabled"] = cfg.deblur_enabled;
  m.config["constants"] = io::to_json(cfg.consts);
  write_filter_outputs(run, cfg.filter, o.out, o.decisions_out, m);
  if (!o.aoi_out.empty()) {
    std::vector<AreaOfInterest> aois;
    for (const auto& img : run.images) aois.insert(aois.end(), img.aois.begin(), img.aois.end());
    const fs::path a(o.aoi_out);
    ensure_parent(a);
    io::save_aois(aois, a);
    m.outputs.push_back(a);
  }
  finish(m, sibling_manifest(o.out));
  return kExitOk;
}

// eval ----------------------------------------------------------------------

int cmd_eval(const EvalOptions& o) {
  const auto dets = io::load_detections(o.detections);
  const io::EvalSet set = io::load_eval_set(o.eval_set);
  const SweepResult main = sweep(dets, set, o.iou, o.step);

  const fs::path prefix(o.out_prefix);
  auto path_for = [&](const std::string& suffix) {
    fs::path p = prefix;
    p += suffix;
    return p;
  };
  ensure_parent(path_for("_summary.json"));

  RunManifest m;
  m.command = "eval";
  m.inputs = {o.detections, o.eval_set};
  m.config = {{"iou", o.iou}, {"step", o.step}, {"label", o.label}};

  json summary = {{"label", o.label},
                  {"ap", main.ap},
                  {"averaging", "micro"},
                  {"iou_threshold", o.iou},
                  {"step", o.step},
                  {"images", set.images.size()},
                  {"handheld_annotations", set.handheld_count()},
                  {"detections", dets.size()}};
  io::write_text_atomic(path_for("_pr.csv"), report::pr_csv(main));
  m.outputs.push_back(path_for("_pr.csv"));

  std::vector<report::Curve> curves{{o.label, &main}};
  std::optional<SweepResult> base;
  if (!o.baseline.empty()) {
    const auto base_dets = io::load_detections(o.baseline);
    m.inputs.push_back(o.baseline);
    m.config["baseline_label"] = o.baseline_label;
    m.config["base_conf"] = o.base_conf;
    const FilteredRatios ratios = filtered_ratios(base_dets, dets, set, o.iou, o.base_conf);
    base = sweep(base_dets, set, o.iou, o.step);
    curves.push_back({o.baseline_label, &*base});
    summary["baseline"] = {{"label", o.baseline_label},
                           {"ap", base->ap},
                           {"detections", base_dets.size()}};
    summary["filtered_ratios"] = report::ratios_json(ratios);
    io::write_text_atomic(path_for("_baseline_pr.csv"), report::pr_csv(*base));
    m.outputs.push_back(path_for("_baseline_pr.csv"));
    std::cout << "TP filtered " << ratios.tp_filtered * 100.0 << "%, FP filtered "
              << ratios.fp_filtered * 100.0 << "% at confidence " << o.base_conf << '\n';
  }

  io::write_text_atomic(path_for("_summary.json"), io::dump(summary));
  io::write_text_atomic(path_for("_pr.svg"), report::pr_svg(curves));
  m.outputs.push_back(path_for("_summary.json"));
  m.outputs.push_back(path_for("_pr.svg"));
  finish(m, path_for("_manifest.json"));
  std::cout << o.label << " AP " << main.ap << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Pose-guided false-positive filtering and handheld-aware evaluation", "hod"};
  app.set_version_flag("--version", HOD_VERSION);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file of option defaults; command-line flags win");
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--threads", g.threads, "Worker threads for per-image work")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  BuildSubsetOptions bso;
  auto* bs = app.add_subcommand("build-subset", "Split a COCO file and build handheld subsets");
  bs->add_option("--coco", bso.coco, "COCO annotation file")->required();
  bs->add_option("--classes", bso.classes, "JSON list of handheld class ids")
      ->required();
  bs->add_option("--person-id", bso.person_id, "Category id of the person class")
      ->capture_default_str();
  bs->add_option("--splits", bso.splits, "Train,val,test fractions, e.g. 0.5,0.25,0.25")
      ->delimiter(',')
      ->expected(3);
  bs->add_option("--seed", bso.seed, "Split shuffle seed")->capture_default_str();
  bs->add_option("--flags", bso.flags, "Handheld flags JSON (annotation ids)");
  bs->add_option("--subset-from", bso.subset_from, "Which images feed the handheld subset")
      ->check(CLI::IsMember({"all", "train", "val", "test"}))
      ->capture_default_str();
  bs->add_option("--out", bso.out, "Output directory")->required();

  BlurOptions blo;
  auto* bl = app.add_subcommand("blur", "Apply seeded rotational + linear blur to images");
  bl->add_option("--images", blo.images, "Input image directory")
      ->required();
  bl->add_option("--out", blo.out, "Output directory")->required();
  bl->add_option("--seed", blo.seed, "Augmentation seed")->capture_default_str();
  bl->add_option("--linear-len", blo.linear_len, "Linear blur length range MIN,MAX (px)")
      ->delimiter(',')
      ->expected(2)
      ->capture_default_str();
  bl->add_option("--rot-deg", blo.rot_deg, "Rotational blur half-angle range MIN,MAX (deg)")
      ->delimiter(',')
      ->expected(2)
      ->capture_default_str();
  bl->add_option("--rot-samples", blo.rot_samples, "Rotation samples (odd, >= 3)")
      ->capture_default_str();

  AoiOptions ao;
  auto* aoi = app.add_subcommand("aoi", "Generate areas of interest from poses");
  aoi->add_option("--poses", ao.poses, "Pose file")->required();
  aoi->add_option("--meta", ao.meta, "COCO-format file supplying image sizes")
      ->required();
  aoi->add_option("--consts", ao.consts, "JSON overriding anthropometric constants");
  aoi->add_option("--kp-threshold", ao.kp_threshold, "Keypoint confidence cutoff")
      ->capture_default_str();
  aoi->add_option("--out", ao.out, "Output AOI file")->required();

  FilterOptions fo;
  auto* fl = app.add_subcommand("filter", "Filter detections against areas of interest");
  fl->add_option("--detections", fo.detections, "COCO results JSON")
      ->required();
  fl->add_option("--aoi", fo.aoi, "AOI file")->required();
  fl->add_option("--upper", fo.upper, "Upper confidence threshold (>1 disables the bypass)")
      ->capture_default_str();
  fl->add_option("--overlap", fo.overlap, "Required overlap fraction")->capture_default_str();
  fl->add_option("--cap", fo.cap, "Size cap multiplier")->capture_default_str();
  fl->add_option("--mode", fo.mode, "auto, upper or no-upper")
      ->check(CLI::IsMember({"auto", "upper", "no-upper"}))
      ->capture_default_str();
  fl->add_option("--out", fo.out, "Filtered detections")->required();
  fl->add_option("--decisions-out", fo.decisions_out, "Per-detection decision log");

  RunOptions ro;
  auto* rn = app.add_subcommand("run", "Generate AOIs from poses and filter in one pass");
  rn->add_option("--detections", ro.detections, "COCO results JSON")
      ->required();
  rn->add_option("--poses", ro.poses, "Pose file")->required();
  rn->add_option("--meta", ro.meta, "COCO-format file supplying image sizes")
      ->required();
  rn->add_option("--consts", ro.consts, "JSON overriding anthropometric constants");
  rn->add_option("--pose-threshold", ro.pose_threshold,
                 "Person count up to which top-down poses are expected (-1: always)")
      ->capture_default_str();
  rn->add_option("--kp-threshold", ro.kp_threshold, "Keypoint confidence cutoff")
      ->capture_default_str();
  rn->add_option("--upper", ro.upper, "Upper confidence threshold")->capture_default_str();
  rn->add_option("--overlap", ro.overlap, "Required overlap fraction")->capture_default_str();
  rn->add_option("--cap", ro.cap, "Size cap multiplier")->capture_default_str();
  rn->add_flag("--deblur", ro.deblur, "Record that inputs came from deblurred frames");
  rn->add_option("--out", ro.out, "Filtered detections")->required();
  rn->add_option("--decisions-out", ro.decisions_out, "Per-detection decision log");
  rn->add_option("--aoi-out", ro.aoi_out, "Write the generated AOIs here");

  EvalOptions eo;
  auto* ev = app.add_subcommand("eval", "Handheld-aware PR sweep and AP");
  ev->add_option("--detections", eo.detections, "Detections to evaluate")
      ->required();
  ev->add_option("--eval-set", eo.eval_set, "Evaluation set (COCO with handheld flags)")
      ->required();
  ev->add_option("--iou", eo.iou, "IoU match threshold")->capture_default_str();
  ev->add_option("--step", eo.step, "Confidence sweep step")->capture_default_str();
  ev->add_option("--baseline", eo.baseline, "Unfiltered detections for ratio reporting");
  ev->add_option("--base-conf", eo.base_conf, "Confidence for filtered ratios")
      ->capture_default_str();
  ev->add_option("--label", eo.label, "Legend label")->capture_default_str();
  ev->add_option("--baseline-label", eo.baseline_label, "Legend label of the baseline")
      ->capture_default_str();
  ev->add_option("--out-prefix", eo.out_prefix, "Output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bs) return cmd_build_subset(bso);
    if (*bl) return cmd_blur(blo, g);
    if (*aoi) return cmd_aoi(ao, g);
    if (*fl) return cmd_filter(fo, g);
    if (*rn) return cmd_run(ro, g);
    if (*ev) return cmd_eval(eo);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace hod::cli
