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

// Acceptance suite runner: one PASS/FAIL line per check.
//
//   acceptance [--filter NAME]... [--reduced] [--artifacts DIR] [--seed N]
//
// Exit status is 0 when every selected check passes and 2 otherwise.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "bratteli/checks/acceptance.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/io.hpp"

int main(int argc, char** argv) {
  namespace checks = bratteli::checks;
  std::vector<std::string> filter;
  checks::SuiteOptions options;
  std::string artifacts;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    const bool has_value = k + 1 < argc;
    if (arg == "--filter" && has_value) {
      filter.emplace_back(argv[++k]);
    } else if (arg == "--artifacts" && has_value) {
      artifacts = argv[++k];
    } else if (arg == "--seed" && has_value) {
      options.seed = std::stoull(argv[++k]);
    } else if (arg == "--reduced") {
      options.reduced = true;
    } else if (arg == "--list") {
      for (const auto& c : checks::acceptance_checks()) {
        std::cout << c.name << "  " << c.summary << "\n";
      }
      return 0;
    } else {
      std::cerr << "usage: acceptance [--filter NAME]... [--reduced] [--artifacts DIR] "
                   "[--seed N] [--list]\n";
      return 1;
    }
  }
  try {
    options.log = &std::cout;
    const auto results = checks::run_suite(filter, options);
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed;
      if (artifacts.empty()) continue;
      for (const auto& a : r.artifacts) {
        bratteli::write_text_file(std::filesystem::path(artifacts) / a.filename, a.contents);
      }
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    std::cout << passed << "/" << results.size() << " acceptance checks passed\n";
    return all ? 0 : 2;
  } catch (const bratteli::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
