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
#include <deque>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/discrete_measure.hpp"
#include "bratteli/graph.hpp"

namespace bratteli {

// Exact path counts over one graph.
//
// dimensions(n)[i] is the number of paths from the root to vertex i of level
// n. Levels are filled bottom-up on first request and kept; the table is not
// synchronized, so share a PathCounter between threads only after the levels
// they read have been filled.
class PathCounter {
 public:
  explicit PathCounter(const GradedGraph& graph);

  const GradedGraph& graph() const { return *graph_; }

  const std::vector<BigInt>& dimensions(std::size_t level);
  const BigInt& dimension(VertexRef v);

  // nu_v(w) = dim(w) / dim(v) over the predecessors w of v.
  DiscreteMeasure<Rational> predecessor_distribution(VertexRef v);

  // Number of paths from u up to v (1 when u == v, 0 when none exist).
  BigInt skew_dimension(VertexRef u, VertexRef v) const;

 private:
  const GradedGraph* graph_;
  std::deque<std::vector<BigInt>> dims_;  // deque: references stay valid as levels grow
};

// Paths from `from` to every vertex of `to_level`, by forward dynamic
// programming; memory is two levels wide.
std::vector<BigInt> forward_counts(const GradedGraph& graph, VertexRef from,
                                   std::size_t to_level);

// Paths from every vertex of `to_level` up to `anchor`, by backward dynamic
// programming over predecessor lists.
std::vector<BigInt> backward_counts(const GradedGraph& graph, VertexRef anchor,
                                    std::size_t to_level);

// One step of the backward recursion: counts on level n+1 to counts on n.
std::vector<BigInt> step_down(const GradedGraph& graph, std::size_t upper_level,
                              const std::vector<BigInt>& upper);

}  // namespace bratteli
