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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bratteli {

// A vertex of a graded graph, addressed by level and position in the level.
struct VertexRef {
  std::uint32_t level = 0;
  std::uint32_t index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

std::string to_string(VertexRef v);

// One level of a graded graph: labels plus predecessor lists (indices into
// the previous level), both stored flat.
class Level {
 public:
  Level() = default;

  // Appends a vertex. `predecessors` index into the level below.
  void add_vertex(std::string_view label, std::span<const std::uint32_t> predecessors);

  std::size_t size() const { return pred_offsets_.size() - 1; }
  std::string_view label(std::size_t i) const;
  std::span<const std::uint32_t> predecessors(std::size_t i) const;

  friend bool operator==(const Level&, const Level&) = default;

 private:
  std::vector<std::uint32_t> pred_offsets_{0};
  std::vector<std::uint32_t> preds_;
  std::vector<std::uint32_t> label_offsets_{0};
  std::string labels_;
};

// An N-graded graph without multiple edges, built to a finite depth.
//
// Level 0 holds the single root vertex. Every vertex above the root has at
// least one predecessor, every vertex below the top level has at least one
// successor, and edges only join adjacent levels. The constructor checks all
// of this and throws ValidationError naming the first offending vertex.
// Instances are immutable.
class GradedGraph {
 public:
  GradedGraph(std::string name, std::vector<Level> levels);

  const std::string& name() const { return name_; }

  // Index of the deepest level.
  std::size_t depth() const { return levels_.size() - 1; }
  std::size_t level_size(std::size_t n) const;
  std::size_t vertex_count() const;
  std::size_t max_level_size(std::size_t up_to) const;

  const Level& level(std::size_t n) const;
  static constexpr VertexRef root() { return {0, 0}; }

  std::string_view label(VertexRef v) const;
  std::span<const std::uint32_t> predecessors(VertexRef v) const;
  bool is_predecessor(VertexRef w, VertexRef v) const;
  bool contains(VertexRef v) const;

  // Linear scan; labels are unique per level in the builtin graphs but not
  // required to be in loaded documents (first match wins).
  std::optional<VertexRef> find(std::size_t level, std::string_view label) const;

  // Throws BoundsError unless `v` names an existing vertex.
  void check(VertexRef v) const;

  friend bool operator==(const GradedGraph& a, const GradedGraph& b) {
    return a.name_ == b.name_ && a.levels_ == b.levels_;
  }

 private:
  void validate() const;

  std::string name_;
  std::vector<Level> levels_;
};

inline constexpr int kMaxPascalDimension = 6;
inline constexpr std::size_t kMaxYoungDepth = 40;
// Total vertex budget for builders.
inline constexpr std::size_t kMaxBuiltVertices = std::size_t{1} << 26;

// Pascal graph of the given dimension: level n holds the compositions
// (k_1, ..., k_d) of n, ordered lexicographically descending, and u precedes
// v iff v - u is a unit vector. Labels look like "(2,0,1)".
GradedGraph build_pascal(int dimension, std::size_t depth);

// Young graph: level n holds the partitions of n in reverse lexicographic
// order, and a partition precedes another iff it is obtained by removing one
// box. Labels look like "(3,1,1)"; the root is "()".
GradedGraph build_young(std::size_t depth);

// Position of a composition in the level order used by build_pascal.
std::uint64_t composition_rank(std::span<const int> parts);

// Parses "(a,b,...)" labels produced by the builders; nullopt otherwise.
std::optional<std::vector<int>> parse_tuple_label(std::string_view label);
std::string format_tuple_label(std::span<const int> values);

}  // namespace bratteli
