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
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/combinatorics.hpp"
#include "bratteli/discrete_measure.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/transport.hpp"

namespace bratteli {

struct MetricOptions {
  // Level carrying the discrete base metric (distance 1 between distinct
  // vertices). Levels below it get the zero semimetric.
  std::size_t seed_level = 1;
  // Number of most recent levels kept in memory; 0 keeps all of them.
  // Evicted levels are never recomputed.
  std::size_t retain_levels = 0;
};

// First level holding at least two vertices, or the graph depth when every
// level is a singleton. This is the lowest seed at which the recursion is
// not identically zero.
std::size_t first_branching_level(const GradedGraph& graph);

// Symmetric distance matrix on the vertices of one level.
template <Scalar T>
class LevelMetric {
 public:
  LevelMetric(std::size_t level, std::size_t size)
      : level_(level), size_(size), data_(size * size, T(0)) {}

  std::size_t level() const { return level_; }
  std::size_t size() const { return size_; }
  static constexpr ArithmeticMode mode() { return kModeOf<T>; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }
  void set(std::size_t i, std::size_t j, const T& value) {
    data_[i * size_ + j] = value;
    data_[j * size_ + i] = value;
  }
  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * size_, size_);
  }

  T diameter() const {
    T best(0);
    for (const T& d : data_) {
      if (best < d) best = d;
    }
    return best;
  }

  friend bool operator==(const LevelMetric&, const LevelMetric&) = default;

 private:
  std::size_t level_;
  std::size_t size_;
  std::vector<T> data_;
};

// Partition of one level into groups of vertices at mutual distance zero.
struct QuotientClasses {
  std::size_t level = 0;
  std::vector<std::vector<std::uint32_t>> classes;

  friend bool operator==(const QuotientClasses&, const QuotientClasses&) = default;
};

// The intrinsic semimetric of a graded graph.
//
// Level n + 1 distances are Kantorovich distances between predecessor
// distributions, priced with the level n metric. Levels are computed once,
// bottom-up, on first request. Cross-level distances come from
// adjacent_level_distance (transport from a point mass to a predecessor
// distribution on the lower level) minimized over graph paths.
template <Scalar T>
class IntrinsicMetric {
 public:
  IntrinsicMetric(const GradedGraph& graph, PathCounter& counter, MetricOptions options = {});

  const GradedGraph& graph() const { return *graph_; }
  const MetricOptions& options() const { return options_; }

  const LevelMetric<T>& level_metric(std::size_t n);
  const std::vector<DiscreteMeasure<T>>& predecessor_distributions(std::size_t n);

  // Distance between u on level n and w on level n + 1:
  // sum over predecessors x of w of nu_w(x) * rho_n(u, x).
  T adjacent_level_distance(VertexRef u, VertexRef w);

  // Minimum over graph paths z = w_m < ... < w_n = v of the summed adjacent
  // distances. Throws UnreachableError when no path exists.
  T path_distance(VertexRef z, VertexRef v);

  // path_distance from z to each target, in one sweep. Targets must sit on
  // strictly increasing levels above z.
  std::vector<T> path_distances(VertexRef z, std::span<const VertexRef> targets);

  // Zero-distance classes of level n, ordered by smallest member. Requires
  // exact arithmetic; the float instantiation throws ModeError.
  QuotientClasses zero_classes(std::size_t n);

  // Diameters of levels 1..up_to.
  std::vector<T> diameter_profile(std::size_t up_to);

  std::size_t transport_solves() const { return transport_solves_; }

 private:
  void compute_next_level();

  const GradedGraph* graph_;
  PathCounter* counter_;
  MetricOptions options_;
  std::deque<std::optional<LevelMetric<T>>> levels_;
  std::deque<std::vector<DiscreteMeasure<T>>> nus_;
  TransportSolver<T> solver_;
  std::size_t transport_solves_ = 0;
};

extern template class IntrinsicMetric<Rational>;
extern template class IntrinsicMetric<double>;

}  // namespace bratteli
