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

#include "geomgate/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "geomgate/errors.hpp"
#include "geomgate/version.hpp"

namespace geomgate {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) {
  std::ostringstream line;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) line << ",";
    line << header[i];
  }
  lines_.push_back(line.str());
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  std::ostringstream line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line << ",";
    line << cells[i];
  }
  lines_.push_back(line.str());
}

std::string CsvWriter::str() const {
  std::ostringstream out;
  for (const auto& l : lines_) out << l << "\n";
  return out.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw Error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json matrix_to_json(const MatX& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  j["entries_row_major"] = std::move(entries);
  return j;
}

MatX matrix_from_json(const nlohmann::json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries_row_major");
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw ConfigError("matrix_from_json: entry count mismatch");
  }
  MatX m(rows, cols);
  int k = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c, ++k) {
      m(r, c) = Complex(entries[k][0].get<double>(), entries[k][1].get<double>());
    }
  }
  return m;
}

struct RunManifest::Impl {
  nlohmann::json doc;
};

RunManifest::RunManifest(const nlohmann::json& config, std::uint64_t seed) : impl_(new Impl) {
  impl_->doc["config"] = config;
  impl_->doc["version"] = kVersion;
  impl_->doc["seed"] = seed;
  impl_->doc["files"] = nlohmann::json::array();
}

RunManifest::~RunManifest() { delete impl_; }

void RunManifest::emit(const std::filesystem::path& dir, const std::string& name,
                       const std::string& content) {
  std::filesystem::create_directories(dir);
  write_text_file(dir / name, content);
  impl_->doc["files"].push_back({{"path", name}, {"fnv1a64", fnv1a64_hex(content)}});
}

void RunManifest::finalize(const std::filesystem::path& dir, double wall_ms) {
  impl_->doc["wall_clock_ms"] = wall_ms;
  write_text_file(dir / "manifest.json", impl_->doc.dump(2) + "\n");
}

const nlohmann::json& RunManifest::files() const { return impl_->doc["files"]; }

}  // namespace geomgate
