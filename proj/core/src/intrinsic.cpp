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

#include "bratteli/intrinsic.hpp"

#include <numeric>

#include "bratteli/errors.hpp"

namespace bratteli {

std::size_t first_branching_level(const GradedGraph& graph) {
  for (std::size_t n = 1; n <= graph.depth(); ++n) {
    if (graph.level_size(n) >= 2) return n;
  }
  return graph.depth();
}

template <Scalar T>
IntrinsicMetric<T>::IntrinsicMetric(const GradedGraph& graph, PathCounter& counter,
                                    MetricOptions options)
    : graph_(&graph), counter_(&counter), options_(options) {
  if (&counter.graph() != &graph) {
    throw ValidationError("path counter belongs to a different graph");
  }
  if (options_.seed_level < 1 || options_.seed_level > graph.depth()) {
    throw BoundsError("seed level must lie in [1, " + std::to_string(graph.depth()) +
                      "], got " + std::to_string(options_.seed_level));
  }
}

template <Scalar T>
const std::vector<DiscreteMeasure<T>>& IntrinsicMetric<T>::predecessor_distributions(
    std::size_t n) {
  if (n < 1 || n > graph_->depth()) {
    throw BoundsError("predecessor distributions exist for levels 1.." +
                      std::to_string(graph_->depth()) + ", got " + std::to_string(n));
  }
  while (nus_.size() <= n) {
    const std::size_t level = nus_.size();
    std::vector<DiscreteMeasure<T>> row;
    if (level >= 1) {
      row.reserve(graph_->level_size(level));
      for (std::size_t i = 0; i < graph_->level_size(level); ++i) {
        row.push_back(convert_measure<T>(counter_->predecessor_distribution(
            {static_cast<std::uint32_t>(level), static_cast<std::uint32_t>(i)})));
      }
    }
    nus_.push_back(std::move(row));
  }
  return nus_[n];
}

template <Scalar T>
void IntrinsicMetric<T>::compute_next_level() {
  const std::size_t level = levels_.size();
  const std::size_t size = graph_->level_size(level);
  LevelMetric<T> metric(level, size);
  if (level == options_.seed_level) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) metric.set(i, j, T(1));
    }
  } else if (level > options_.seed_level) {
    const auto& nus = predecessor_distributions(level);
    const LevelMetric<T>& below = *levels_[level - 1];
    T value;
    T term;
    for (std::size_t i = 0; i < size; ++i) {
      const auto& a = nus[i];
      for (std::size_t j = i + 1; j < size; ++j) {
        const auto& b = nus[j];
        if (a.support == b.support && a.weights == b.weights) continue;
        if (a.size() == 1 || b.size() == 1) {
          // Only one coupling exists when either side is a point mass.
          const auto& point = a.size() == 1 ? a : b;
          const auto& spread = a.size() == 1 ? b : a;
          value = T(0);
          for (std::size_t k = 0; k < spread.size(); ++k) {
            term = spread.weights[k];
            term *= below(point.support[0], spread.support[k]);
            value += term;
          }
        } else {
          value = solver_.solve(std::span<const T>(a.weights), std::span<const T>(b.weights),
                                [&](std::size_t r, std::size_t c) -> const T& {
                                  return below(a.support[r], b.support[c]);
                                });
          ++transport_solves_;
        }
        metric.set(i, j, value);
      }
    }
  }
  levels_.emplace_back(std::move(metric));
  if (options_.retain_levels > 0 && level >= options_.retain_levels) {
    levels_[level - options_.retain_levels].reset();
  }
}

template <Scalar T>
const LevelMetric<T>& IntrinsicMetric<T>::level_metric(std::size_t n) {
  if (n > graph_->depth()) {
    throw BoundsError("level " + std::to_string(n) + " exceeds graph depth " +
                      std::to_string(graph_->depth()));
  }
  while (levels_.size() <= n) compute_next_level();
  if (!levels_[n]) {
    throw BoundsError("level " + std::to_string(n) +
                      " metric was evicted (retain_levels = " +
                      std::to_string(options_.retain_levels) + ")");
  }
  return *levels_[n];
}

template <Scalar T>
T IntrinsicMetric<T>::adjacent_level_distance(VertexRef u, VertexRef w) {
  graph_->check(u);
  graph_->check(w);
  if (u.level + 1 != w.level) {
    throw BoundsError("adjacent level distance needs level(w) = level(u) + 1, got " +
                      to_string(u) + " and " + to_string(w));
  }
  const auto& rho = level_metric(u.level);
  const auto& nu = predecessor_distributions(w.level)[w.index];
  T total(0);
  T term;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    term = nu.weights[k];
    term *= rho(u.index, nu.support[k]);
    total += term;
  }
  return total;
}

template <Scalar T>
T IntrinsicMetric<T>::path_distance(VertexRef z, VertexRef v) {
  const VertexRef targets[] = {v};
  return path_distances(z, targets).front();
}

template <Scalar T>
std::vector<T> IntrinsicMetric<T>::path_distances(VertexRef z,
                                                  std::span<const VertexRef> targets) {
  graph_->check(z);
  std::vector<T> out;
  if (targets.empty()) return out;
  std::uint32_t last = z.level;
  for (const auto& t : targets) {
    graph_->check(t);
    if (t.level <= last) {
      throw BoundsError("path distance targets must lie on increasing levels above " +
                        to_string(z));
    }
    last = t.level;
  }
  const std::size_t top = targets.back().level;
  // Materialize everything first: deque storage keeps these references valid.
  level_metric(top - 1);
  predecessor_distributions(top);
  std::vector<const LevelMetric<T>*> rho;
  for (std::size_t k = z.level; k < top; ++k) rho.push_back(&level_metric(k));

  std::vector<T> current(graph_->level_size(z.level), T(0));
  std::vector<char> reached(current.size(), 0);
  reached[z.index] = 1;
  std::vector<T> next;
  std::vector<char> next_reached;
  T adjacent;
  T term;
  T candidate;
  std::size_t target = 0;
  for (std::size_t k = z.level; k < top; ++k) {
    const LevelMetric<T>& metric = *rho[k - z.level];
    const auto& nus = nus_[k + 1];
    const Level& upper = graph_->level(k + 1);
    next.assign(upper.size(), T(0));
    next_reached.assign(upper.size(), 0);
    for (std::size_t w = 0; w < upper.size(); ++w) {
      const auto& nu = nus[w];
      for (std::uint32_t x : upper.predecessors(w)) {
        if (!reached[x]) continue;
        adjacent = T(0);
        for (std::size_t s = 0; s < nu.size(); ++s) {
          term = nu.weights[s];
          term *= metric(x, nu.support[s]);
          adjacent += term;
        }
        candidate = current[x];
        candidate += adjacent;
        if (!next_reached[w] || candidate < next[w]) {
          next[w] = candidate;
          next_reached[w] = 1;
        }
      }
    }
    std::swap(current, next);
    std::swap(reached, next_reached);
    while (target < targets.size() && targets[target].level == k + 1) {
      const auto idx = targets[target].index;
      if (!reached[idx]) {
        throw UnreachableError("no path from " + to_string(z) + " to " +
                               to_string(targets[target]));
      }
      out.push_back(current[idx]);
      ++target;
    }
  }
  return out;
}

template <Scalar T>
QuotientClasses IntrinsicMetric<T>::zero_classes(std::size_t n) {
  if constexpr (!std::same_as<T, Rational>) {
    (void)n;
    throw ModeError("zero classes need exact arithmetic; recompute in exact mode");
  } else {
    const auto& metric = level_metric(n);
    std::vector<std::uint32_t> parent(metric.size());
    std::iota(parent.begin(), parent.end(), 0u);
    const auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::uint32_t i = 0; i < metric.size(); ++i) {
      for (std::uint32_t j = i + 1; j < metric.size(); ++j) {
        if (!is_zero(metric(i, j))) continue;
        const auto a = find(i);
        const auto b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    QuotientClasses out{n, {}};
    std::vector<std::int64_t> slot(metric.size(), -1);
    for (std::uint32_t i = 0; i < metric.size(); ++i) {
      const auto r = find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<std::int64_t>(out.classes.size());
        out.classes.emplace_back();
      }
      out.classes[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return out;
  }
}

template <Scalar T>
std::vector<T> IntrinsicMetric<T>::diameter_profile(std::size_t up_to) {
  if (up_to > graph_->depth()) {
    throw BoundsError("diameter profile level " + std::to_string(up_to) +
                      " exceeds graph depth " + std::to_string(graph_->depth()));
  }
  std::vector<T> out;
  for (std::size_t n = 1; n <= up_to; ++n) out.push_back(level_metric(n).diameter());
  return out;
}

template class IntrinsicMetric<Rational>;
template class IntrinsicMetric<double>;

}  // namespace bratteli
