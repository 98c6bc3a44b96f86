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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/measures.hpp"
#include "json.hpp"

namespace bratteli::cli {

struct RunConfig {
  std::string command;
  std::string graph = "pascal:2";
  std::optional<std::size_t> depth;
  std::string mode = "auto";
  std::string out;
  std::uint64_t seed = 20260101;
  std::string seed_level = "1";
  std::size_t retain_levels = 0;

  // metric
  std::string levels;

  // measure
  std::string anchor;
  std::string path;
  std::string marginals;
  std::optional<std::size_t> cylinder_depth;
  std::size_t window = 20;
  std::string tolerance = "1/20";
  std::optional<std::size_t> burn_in;
  std::size_t regularity_depth = 512;

  // selftest
  std::vector<std::string> filter;
  bool force_fail = false;
};

struct LevelRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

// "a..b" or a single level "a".
LevelRange parse_level_range(const std::string& text);

// "pascal:d", "young" or "file:PATH". Builtins are built to `depth`; files
// must reach it and default to their own depth.
GradedGraph make_graph(const std::string& text, std::optional<std::size_t> depth);

// "L:I" where I is an index or a vertex label.
VertexRef parse_anchor(const GradedGraph& graph, const std::string& text);

// "freq:p/q", "oscillate:a,b[,block]" or "file:PATH".
FinitePath make_path(const GradedGraph& graph, const std::string& text, std::size_t depth);

// "auto" resolves to the first level with more than one vertex.
std::size_t resolve_seed_level(const GradedGraph& graph, const std::string& text);

// Echo of every parameter plus the artifact version. No timestamps, so equal
// configs give equal files.
nlohmann::ordered_json config_json(const RunConfig& config);

}  // namespace bratteli::cli
