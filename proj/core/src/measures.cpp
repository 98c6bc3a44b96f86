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

#include "bratteli/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bratteli/errors.hpp"

namespace bratteli {

FinitePath::FinitePath(const GradedGraph& graph, std::vector<std::uint32_t> indices)
    : indices_(std::move(indices)) {
  if (indices_.empty() || indices_[0] != 0) {
    throw ValidationError("a finite path must start at the root");
  }
  if (indices_.size() - 1 > graph.depth()) {
    throw BoundsError("path of length " + std::to_string(indices_.size() - 1) +
                      " exceeds graph depth " + std::to_string(graph.depth()));
  }
  for (std::size_t n = 1; n < indices_.size(); ++n) {
    const VertexRef prev{static_cast<std::uint32_t>(n - 1), indices_[n - 1]};
    const VertexRef cur{static_cast<std::uint32_t>(n), indices_[n]};
    if (!graph.contains(cur) || !graph.is_predecessor(prev, cur)) {
      throw ValidationError("path step " + to_string(prev) + " -> " + to_string(cur) +
                            " is not an edge");
    }
  }
}

VertexRef FinitePath::at(std::size_t level) const {
  if (level >= indices_.size()) {
    throw BoundsError("path has no vertex at level " + std::to_string(level));
  }
  return {static_cast<std::uint32_t>(level), indices_[level]};
}

FinitePath FinitePath::prefix(std::size_t length) const {
  if (length > this->length()) {
    throw BoundsError("prefix length " + std::to_string(length) + " exceeds path length");
  }
  return FinitePath(std::vector<std::uint32_t>(indices_.begin(),
                                               indices_.begin() + static_cast<long>(length) + 1));
}

std::vector<FinitePath> enumerate_paths(const GradedGraph& graph, std::size_t length) {
  if (length > graph.depth()) {
    throw BoundsError("path length " + std::to_string(length) + " exceeds graph depth " +
                      std::to_string(graph.depth()));
  }
  std::vector<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> stack(length + 1, 0);
  // Depth-first descent through predecessor lists from each top vertex.
  const auto descend = [&](auto&& self, std::size_t level) -> void {
    if (level == 0) {
      found.push_back(stack);
      return;
    }
    for (std::uint32_t p : graph.level(level).predecessors(stack[level])) {
      stack[level - 1] = p;
      self(self, level - 1);
    }
  };
  for (std::uint32_t v = 0; v < graph.level_size(length); ++v) {
    stack[length] = v;
    descend(descend, length);
  }
  std::sort(found.begin(), found.end());
  std::vector<FinitePath> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(FinitePath(graph, std::move(f)));
  return out;
}

CentralMeasureApprox::CentralMeasureApprox(const GradedGraph& graph, VertexRef anchor)
    : graph_(&graph), anchor_(anchor) {
  graph.check(anchor);
  std::vector<BigInt> top(graph.level_size(anchor.level));
  top[anchor.index] = 1;
  cache_.emplace(anchor.level, std::move(top));
}

const std::vector<BigInt>& CentralMeasureApprox::codimensions(std::size_t level) {
  if (level > anchor_.level) {
    throw BoundsError("level " + std::to_string(level) + " lies above the anchor " +
                      to_string(anchor_));
  }
  auto it = cache_.lower_bound(level);
  if (it->first == level) return it->second;
  std::vector<BigInt> counts = it->second;
  for (std::size_t n = it->first; n > level; --n) counts = step_down(*graph_, n, counts);
  return cache_.emplace(level, std::move(counts)).first->second;
}

const BigInt& CentralMeasureApprox::anchor_dimension() { return codimensions(0)[0]; }

Rational CentralMeasureApprox::cylinder_probability(const FinitePath& path) {
  if (path.length() > anchor_.level) {
    throw BoundsError("path of length " + std::to_string(path.length()) +
                      " is longer than the anchor level " + std::to_string(anchor_.level));
  }
  const BigInt& through = codimensions(path.length())[path.end().index];
  Rational p(through, anchor_dimension());
  p.canonicalize();
  return p;
}

DiscreteMeasure<Rational> CentralMeasureApprox::level_marginal(PathCounter& counter,
                                                               std::size_t level) {
  if (&counter.graph() != graph_) {
    throw ValidationError("path counter belongs to a different graph");
  }
  const auto& codim = codimensions(level);
  const auto& dims = counter.dimensions(level);
  const BigInt& total = anchor_dimension();
  DiscreteMeasure<Rational> out;
  out.level = level;
  for (std::uint32_t i = 0; i < codim.size(); ++i) {
    if (sgn(codim[i]) == 0) continue;
    Rational w(dims[i] * codim[i], total);
    w.canonicalize();
    out.support.push_back(i);
    out.weights.push_back(std::move(w));
  }
  return out;
}

Rational cylinder_probability(const GradedGraph& graph, VertexRef anchor,
                              const FinitePath& path) {
  return CentralMeasureApprox(graph, anchor).cylinder_probability(path);
}

DiscreteMeasure<Rational> level_marginal(const GradedGraph& graph, PathCounter& counter,
                                         VertexRef anchor, std::size_t level) {
  return CentralMeasureApprox(graph, anchor).level_marginal(counter, level);
}

DiscreteMeasure<Rational> project_measure(PathCounter& counter,
                                          const DiscreteMeasure<Rational>& measure) {
  validate_measure(measure);
  const GradedGraph& graph = counter.graph();
  if (measure.level < 1 || measure.level > graph.depth()) {
    throw BoundsError("cannot project a measure on level " + std::to_string(measure.level));
  }
  if (measure.support.back() >= graph.level_size(measure.level)) {
    throw ValidationError("measure support leaves level " + std::to_string(measure.level));
  }
  std::map<std::uint32_t, Rational> mass;
  for (std::size_t k = 0; k < measure.size(); ++k) {
    const auto nu = counter.predecessor_distribution(
        {static_cast<std::uint32_t>(measure.level), measure.support[k]});
    for (std::size_t s = 0; s < nu.size(); ++s) {
      mass[nu.support[s]] += measure.weights[k] * nu.weights[s];
    }
  }
  DiscreteMeasure<Rational> out;
  out.level = measure.level - 1;
  for (auto& [index, w] : mass) {
    out.support.push_back(index);
    out.weights.push_back(std::move(w));
  }
  return out;
}

double RegularityReport::max_gap_after_burn_in() const {
  double best = 0.0;
  for (const auto& g : gaps) {
    if (g.start >= burn_in) best = std::max(best, g.value);
  }
  return best;
}

double RegularityReport::min_gap_after_burn_in() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& g : gaps) {
    if (g.start >= burn_in) best = std::min(best, g.value);
  }
  return best;
}

namespace {

template <Scalar T>
RegularityReport regularity_impl(const GradedGraph& graph, PathCounter& counter,
                                 const FinitePath& path, const RegularityOptions& options,
                                 std::size_t burn_in) {
  const std::size_t depth = path.length();
  const std::size_t window = options.window;
  MetricOptions metric_options = options.metric;
  // Window distances from t_k need levels k..k+window-1 in memory.
  metric_options.retain_levels = std::max(metric_options.retain_levels, window + 2);
  IntrinsicMetric<T> metric(graph, counter, metric_options);

  // forward[k][j] = path distance from t_k to t_{k+1+j}.
  std::vector<std::vector<T>> forward(depth);
  std::vector<VertexRef> targets;
  for (std::size_t k = 0; k < depth; ++k) {
    targets.clear();
    for (std::size_t l = k + 1; l <= std::min(k + window, depth); ++l) {
      targets.push_back(path.at(l));
    }
    forward[k] = metric.path_distances(path.at(k), targets);
  }

  RegularityReport report;
  report.depth = depth;
  report.window = window;
  report.burn_in = burn_in;
  report.tolerance = options.tolerance;
  report.mode = kModeOf<T>;
  const T tolerance = from_rational<T>(options.tolerance);
  bool regular = true;
  for (std::size_t start = 0; start + window <= depth; ++start) {
    T best(0);
    std::size_t from = start;
    std::size_t to = start + 1;
    for (std::size_t k = start; k < start + window; ++k) {
      for (std::size_t l = k + 1; l <= start + window; ++l) {
        const T& d = forward[k][l - k - 1];
        if (best < d) {
          best = d;
          from = k;
          to = l;
        }
      }
    }
    WindowGap gap{start, from, to, to_double(best), {}};
    if constexpr (std::same_as<T, Rational>) gap.exact = format_rational(best);
    if (start >= burn_in && !(best < tolerance)) regular = false;
    report.gaps.push_back(std::move(gap));
  }
  report.regular = regular;
  return report;
}

}  // namespace

RegularityReport regularity_report(const GradedGraph& graph, PathCounter& counter,
                                   const FinitePath& path, const RegularityOptions& options) {
  const std::size_t depth = path.length();
  if (options.window < 1 || options.window > depth) {
    throw BoundsError("regularity window " + std::to_string(options.window) +
                      " must lie in [1, " + std::to_string(depth) + "]");
  }
  const std::size_t burn_in = options.burn_in.value_or(depth / 5);
  if (burn_in + options.window > depth) {
    throw BoundsError("burn-in " + std::to_string(burn_in) + " leaves no complete window");
  }
  if (sgn(options.tolerance) <= 0) throw ValidationError("tolerance must be positive");
  const auto mode = resolve_mode(options.mode, graph.max_level_size(depth));
  if (mode == ArithmeticMode::kExact) {
    return regularity_impl<Rational>(graph, counter, path, options, burn_in);
  }
  return regularity_impl<double>(graph, counter, path, options, burn_in);
}

LimitEstimate estimate_limit_measure(const GradedGraph& graph, const FinitePath& path,
                                     std::size_t cylinder_depth) {
  const std::size_t depth = path.length();
  if (cylinder_depth >= depth) {
    throw BoundsError("cylinder depth " + std::to_string(cylinder_depth) +
                      " must be below the path length " + std::to_string(depth));
  }
  LimitEstimate out;
  out.cylinder_depth = cylinder_depth;
  out.cylinders = enumerate_paths(graph, cylinder_depth);

  // Forward counts from the root and from every vertex of the cylinder
  // level, advanced together level by level.
  const std::size_t width = graph.level_size(cylinder_depth);
  std::vector<BigInt> from_root = forward_counts(graph, GradedGraph::root(), cylinder_depth);
  std::vector<std::vector<BigInt>> from_end(width);
  for (std::size_t u = 0; u < width; ++u) {
    from_end[u].assign(width, BigInt(0));
    from_end[u][u] = 1;
  }
  const auto advance = [&](std::vector<BigInt>& counts, std::size_t upper_level) {
    const Level& lv = graph.level(upper_level);
    std::vector<BigInt> next(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) {
      for (std::uint32_t p : lv.predecessors(i)) {
        if (sgn(counts[p]) != 0) next[i] += counts[p];
      }
    }
    counts = std::move(next);
  };

  std::vector<Rational> per_end(width);
  for (std::size_t n = cylinder_depth; n <= depth; ++n) {
    if (n > cylinder_depth) {
      advance(from_root, n);
      for (auto& counts : from_end) advance(counts, n);
    }
    const std::uint32_t anchor = path.at(n).index;
    for (std::size_t u = 0; u < width; ++u) {
      per_end[u] = Rational(from_end[u][anchor], from_root[anchor]);
      per_end[u].canonicalize();
    }
    std::vector<Rational> row;
    row.reserve(out.cylinders.size());
    for (const auto& c : out.cylinders) row.push_back(per_end[c.end().index]);
    if (!out.rows.empty()) {
      double sup = 0.0;
      for (std::size_t c = 0; c < row.size(); ++c) {
        sup = std::max(sup, std::abs(to_double(row[c]) - to_double(out.rows.back()[c])));
      }
      out.successive_sup_diff.push_back(sup);
    }
    out.levels.push_back(n);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace bratteli
