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

#include <filesystem>
#include <string>
#include <vector>

#include "hod/io.hpp"

namespace hod {

/// Provenance record written next to every CLI output. The creation
/// timestamp lives here and nowhere else, so outputs stay byte-stable.
struct RunManifest {
  std::string command;
  io::json config = io::json::object();
  io::json seeds = io::json::object();
  std::vector<std::filesystem::path> inputs;
  std::vector<std::filesystem::path> outputs;
};

std::string sha256_hex(const std::filesystem::path& file);

io::json manifest_json(const RunManifest& m, std::string_view version);

void write_manifest(const RunManifest& m, std::string_view version,
                    const std::filesystem::path& path);

}  // namespace hod
