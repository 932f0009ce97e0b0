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

#include <stdexcept>
#include <string>

namespace geomgate {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// No admissible solid-angle branch exists for the requested path parameters.
struct UnreachablePathError : Error {
  using Error::Error;
};

// An envelope cannot meet the requested pulse area within amplitude or
// duration bounds.
struct InfeasibleScheduleError : Error {
  using Error::Error;
};

// Configuration parsing or schema validation failed (CLI exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

// A numerical routine failed or produced an invalid result (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace geomgate
