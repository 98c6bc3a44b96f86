// Copyright 2026 The Bratteli Authors
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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bratteli::checks {

struct Artifact {
  std::string filename;
  std::string contents;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  std::vector<Artifact> artifacts;
};

struct SuiteOptions {
  // Smaller depths and sample counts, for the CLI selftest.
  bool reduced = false;
  std::uint64_t seed = 20260101;
  // Receives one progress line per finished check when set.
  std::ostream* log = nullptr;
};

struct CheckInfo {
  std::string_view name;
  std::string_view summary;
};

std::span<const CheckInfo> acceptance_checks();

// Runs one check. Unknown names throw ValidationError; any library error
// raised inside the check turns into a failed result.
CheckResult run_check(std::string_view name, const SuiteOptions& options);

// Runs the named checks in suite order, or all of them when `names` is
// empty.
std::vector<CheckResult> run_suite(std::span<const std::string> names,
                                   const SuiteOptions& options);

// "PASS pascal-isometry (1.23 s): detail"
std::string format_result_line(const CheckResult& result);

}  // namespace bratteli::checks
