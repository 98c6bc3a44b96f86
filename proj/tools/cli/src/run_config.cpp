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

#include "run_config.hpp"

#include <charconv>

#include "bratteli/errors.hpp"
#include "bratteli/intrinsic.hpp"
#include "bratteli/io.hpp"
#include "bratteli/paths.hpp"
#include "bratteli/version.hpp"

namespace bratteli::cli {

namespace {

std::size_t parse_size(const std::string& text, const char* what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ValidationError(std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

std::pair<std::string, std::string> split_prefix(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {text, ""};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

}  // namespace

LevelRange parse_level_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_size(text, "level");
    return {n, n};
  }
  LevelRange r{parse_size(text.substr(0, dots), "level range"),
               parse_size(text.substr(dots + 2), "level range")};
  if (r.first > r.last) throw ValidationError("empty level range '" + text + "'");
  return r;
}

GradedGraph make_graph(const std::string& text, std::optional<std::size_t> depth) {
  const auto [kind, arg] = split_prefix(text);
  if (kind == "file") {
    if (arg.empty()) throw ValidationError("file: graph needs a path");
    auto graph = load_graph_file(arg);
    if (depth && *depth > graph.depth()) {
      throw BoundsError("graph file reaches depth " + std::to_string(graph.depth()) +
                        ", requested " + std::to_string(*depth));
    }
    return graph;
  }
  if (!depth) throw ValidationError("--depth is required for builtin graphs");
  if (*depth < 1) throw BoundsError("depth must be at least 1");
  if (kind == "pascal") {
    const auto d = arg.empty() ? std::size_t{2} : parse_size(arg, "pascal dimension");
    return build_pascal(static_cast<int>(d), *depth);
  }
  if (kind == "young" && arg.empty()) return build_young(*depth);
  throw ValidationError("unknown graph '" + text + "' (expected pascal:d, young or file:PATH)");
}

VertexRef parse_anchor(const GradedGraph& graph, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("anchor must be LEVEL:INDEX");
  const auto level = parse_size(text.substr(0, colon), "anchor level");
  if (level > graph.depth()) {
    throw BoundsError("anchor level " + std::to_string(level) + " is deeper than the graph (" +
                      std::to_string(graph.depth()) + ")");
  }
  const std::string vertex = text.substr(colon + 1);
  if (const auto found = graph.find(level, vertex)) return *found;
  const auto index = parse_size(vertex, "anchor vertex");
  if (index >= graph.level_size(level)) {
    throw BoundsError("anchor index " + vertex + " out of range on level " +
                      std::to_string(level));
  }
  return {static_cast<std::uint32_t>(level), static_cast<std::uint32_t>(index)};
}

FinitePath make_path(const GradedGraph& graph, const std::string& text, std::size_t depth) {
  const auto [kind, arg] = split_prefix(text);
  if (kind == "freq") return frequency_path(graph, parse_rational(arg), depth);
  if (kind == "oscillate") {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const auto comma = arg.find(',', start);
      parts.push_back(arg.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
      throw ValidationError("oscillate expects a,b or a,b,blocklen");
    }
    const std::size_t block =
        parts.size() == 3 ? parse_size(parts[2], "block length") : kDefaultOscillationBlock;
    return oscillating_path(graph, parse_rational(parts[0]), parse_rational(parts[1]), block,
                            depth);
  }
  if (kind == "file") return parse_path_text(graph, read_text_file(arg));
  throw ValidationError("unknown path '" + text +
                        "' (expected freq:p/q, oscillate:a,b[,blocklen] or file:PATH)");
}

std::size_t resolve_seed_level(const GradedGraph& graph, const std::string& text) {
  const std::size_t level =
      text == "auto" ? first_branching_level(graph) : parse_size(text, "seed level");
  if (level < 1 || level > graph.depth()) {
    throw BoundsError("seed level " + std::to_string(level) + " outside 1.." +
                      std::to_string(graph.depth()));
  }
  return level;
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["version"] = std::string(kVersion);
  j["command"] = c.command;
  j["graph"] = c.graph;
  j["depth"] = c.depth ? nlohmann::ordered_json(*c.depth) : nlohmann::ordered_json(nullptr);
  j["mode"] = c.mode;
  j["seed"] = c.seed;
  j["seed_level"] = c.seed_level;
  j["retain_levels"] = c.retain_levels;
  if (c.command == "metric") {
    j["levels"] = c.levels;
  } else if (c.command == "measure") {
    j["anchor"] = c.anchor;
    j["path"] = c.path;
    j["marginals"] = c.marginals;
    j["cylinder_depth"] = c.cylinder_depth ? nlohmann::ordered_json(*c.cylinder_depth)
                                           : nlohmann::ordered_json(nullptr);
    j["window"] = c.window;
    j["tolerance"] = c.tolerance;
    j["burn_in"] =
        c.burn_in ? nlohmann::ordered_json(*c.burn_in) : nlohmann::ordered_json(nullptr);
    j["regularity_depth"] = c.regularity_depth;
  } else if (c.command == "selftest") {
    j["filter"] = c.filter;
    j["force_fail"] = c.force_fail;
  }
  return j;
}

}  // namespace bratteli::cli
