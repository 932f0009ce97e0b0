// Copyright 2026 The geomgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "geomgate/linalg.hpp"

namespace geomgate {

// Fixed-format float text (17 significant digits round-trip) so identical
// doubles always serialize to identical bytes.
std::string format_double(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::vector<std::string> lines_;
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

// Complex matrix as structured text: row-major [re, im] pairs.
nlohmann::json matrix_to_json(const MatX& m);
MatX matrix_from_json(const nlohmann::json& j);

// Per-run manifest: echoed config, toolkit version, seed, wall clock, and a
// content hash per emitted file. Reruns with equal config and seed produce
// equal file hashes (the wall clock is informational only).
class RunManifest {
 public:
  RunManifest(const nlohmann::json& config, std::uint64_t seed);
  ~RunManifest();

  // Writes the file under the run directory and records its hash.
  void emit(const std::filesystem::path& dir, const std::string& name,
            const std::string& content);
  void finalize(const std::filesystem::path& dir, double wall_ms);
  const nlohmann::json& files() const;

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace geomgate
