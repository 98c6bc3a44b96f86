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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/combinatorics.hpp"
#include "bratteli/discrete_measure.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/intrinsic.hpp"

namespace bratteli {

// Initial path segment root = s_0 < s_1 < ... < s_m, stored as one vertex
// index per level. It names the cylinder of all infinite paths extending it.
class FinitePath {
 public:
  // Throws ValidationError unless indices[0] is the root and consecutive
  // vertices are joined by an edge.
  FinitePath(const GradedGraph& graph, std::vector<std::uint32_t> indices);

  std::size_t length() const { return indices_.size() - 1; }
  std::span<const std::uint32_t> indices() const { return indices_; }
  VertexRef at(std::size_t level) const;
  VertexRef end() const { return at(length()); }
  FinitePath prefix(std::size_t length) const;

  friend auto operator<=>(const FinitePath&, const FinitePath&) = default;

 private:
  explicit FinitePath(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {}

  std::vector<std::uint32_t> indices_;
};

// All paths of length m from the root, in lexicographic order of indices.
std::vector<FinitePath> enumerate_paths(const GradedGraph& graph, std::size_t length);

// Central measure induced by an anchor vertex t_n: a length-m cylinder
// ending at u gets (paths from u to t_n) / dim(t_n). Counts towards the
// anchor are computed by backward recursion and cached only for the levels
// actually queried.
class CentralMeasureApprox {
 public:
  CentralMeasureApprox(const GradedGraph& graph, VertexRef anchor);

  VertexRef anchor() const { return anchor_; }
  const GradedGraph& graph() const { return *graph_; }

  // Number of paths from each vertex of `level` up to the anchor.
  const std::vector<BigInt>& codimensions(std::size_t level);
  const BigInt& anchor_dimension();

  Rational cylinder_probability(const FinitePath& path);
  DiscreteMeasure<Rational> level_marginal(PathCounter& counter, std::size_t level);

 private:
  const GradedGraph* graph_;
  VertexRef anchor_;
  std::map<std::size_t, std::vector<BigInt>> cache_;
};

Rational cylinder_probability(const GradedGraph& graph, VertexRef anchor,
                              const FinitePath& path);

DiscreteMeasure<Rational> level_marginal(const GradedGraph& graph, PathCounter& counter,
                                         VertexRef anchor, std::size_t level);

// Pushes a measure on level n + 1 down to level n through the predecessor
// distributions: delta_v goes to nu_v, extended affinely.
DiscreteMeasure<Rational> project_measure(PathCounter& counter,
                                          const DiscreteMeasure<Rational>& measure);

struct WindowGap {
  std::size_t start = 0;   // window covers levels start..start+window
  std::size_t from = 0;    // pair attaining the supremum
  std::size_t to = 0;
  double value = 0.0;
  std::string exact;       // "num/den" in exact mode, empty otherwise
};

struct RegularityOptions {
  std::size_t window = 20;
  Rational tolerance{1, 20};
  // Defaults to a fifth of the path length.
  std::optional<std::size_t> burn_in;
  ArithmeticMode mode = ArithmeticMode::kAuto;
  MetricOptions metric;
};

struct RegularityReport {
  std::size_t depth = 0;
  std::size_t window = 0;
  std::size_t burn_in = 0;
  Rational tolerance;
  ArithmeticMode mode = ArithmeticMode::kExact;
  std::vector<WindowGap> gaps;  // one per window start 0..depth-window
  bool regular = false;         // every gap from burn_in on is below tolerance

  // Extremes over windows starting at or after burn_in.
  double max_gap_after_burn_in() const;
  double min_gap_after_burn_in() const;
};

// Sliding-window Cauchy diagnostic for a path: for each window start n,
// the largest cross-level path distance between t_k and t_l with
// n <= k < l <= n + window.
RegularityReport regularity_report(const GradedGraph& graph, PathCounter& counter,
                                   const FinitePath& path, const RegularityOptions& options);

struct LimitEstimate {
  std::size_t cylinder_depth = 0;
  std::vector<FinitePath> cylinders;
  std::vector<std::size_t> levels;               // anchor level of each row
  std::vector<std::vector<Rational>> rows;       // rows[r][c]: cylinder c under t_levels[r]
  std::vector<double> successive_sup_diff;       // sup-norm change from the previous row
};

// Cylinder probabilities of every length-m cylinder under each anchor t_n
// of the path, for n = m..length(path).
LimitEstimate estimate_limit_measure(const GradedGraph& graph, const FinitePath& path,
                                     std::size_t cylinder_depth);

}  // namespace bratteli
