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

#include "bratteli/checks/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "bratteli/errors.hpp"

namespace bratteli::checks {

namespace {

// Flows on a spanning tree of the bipartite graph, or nullopt when some
// flow is negative.
std::optional<std::vector<Rational>> tree_flows(std::size_t m, std::size_t n,
                                                const std::vector<std::size_t>& cells,
                                                std::span<const Rational> supply,
                                                std::span<const Rational> demand) {
  std::vector<Rational> excess(m + n);
  for (std::size_t i = 0; i < m; ++i) excess[i] = supply[i];
  for (std::size_t j = 0; j < n; ++j) excess[m + j] = demand[j];
  std::vector<Rational> flow(cells.size());
  std::vector<bool> done(cells.size(), false);
  for (std::size_t round = 0; round < cells.size(); ++round) {
    std::vector<int> degree(m + n, 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (done[c]) continue;
      ++degree[cells[c] / n];
      ++degree[m + cells[c] % n];
    }
    bool progressed = false;
    for (std::size_t c = 0; c < cells.size() && !progressed; ++c) {
      if (done[c]) continue;
      const std::size_t row = cells[c] / n;
      const std::size_t col = m + cells[c] % n;
      std::size_t leaf = row;
      std::size_t other = col;
      if (degree[row] != 1) std::swap(leaf, other);
      if (degree[leaf] != 1) continue;
      flow[c] = excess[leaf];
      excess[other] -= flow[c];
      excess[leaf] = 0;
      done[c] = true;
      progressed = true;
    }
    if (!progressed) return std::nullopt;
  }
  for (const auto& f : flow) {
    if (sgn(f) < 0) return std::nullopt;
  }
  return flow;
}

bool is_spanning_tree(std::size_t m, std::size_t n, const std::vector<std::size_t>& cells) {
  std::vector<std::size_t> parent(m + n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c : cells) {
    const auto a = root(c / n);
    const auto b = root(m + c % n);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

Rational brute_force_transport(const CostMatrix<Rational>& cost,
                               const DiscreteMeasure<Rational>& mu,
                               const DiscreteMeasure<Rational>& nu) {
  const std::size_t m = mu.size();
  const std::size_t n = nu.size();
  const std::size_t k = m + n - 1;
  const std::size_t total = m * n;
  std::optional<Rational> best;
  std::vector<std::size_t> cells(k);
  std::iota(cells.begin(), cells.end(), 0);
  while (true) {
    if (is_spanning_tree(m, n, cells)) {
      if (auto flow = tree_flows(m, n, cells, mu.weights, nu.weights)) {
        Rational value = 0;
        for (std::size_t c = 0; c < k; ++c) {
          value += (*flow)[c] * cost(mu.support[cells[c] / n], nu.support[cells[c] % n]);
        }
        if (!best || value < *best) best = value;
      }
    }
    // Next k-combination of {0, ..., total - 1}.
    std::size_t pos = k;
    while (pos > 0 && cells[pos - 1] == total - k + pos - 1) --pos;
    if (pos == 0) break;
    ++cells[pos - 1];
    for (std::size_t q = pos; q < k; ++q) cells[q] = cells[q - 1] + 1;
  }
  if (!best) throw ComputationError("transport polytope has no vertex");
  return *best;
}

BigInt count_paths_by_walking(const GradedGraph& graph, VertexRef from, VertexRef to) {
  BigInt count = 0;
  const auto walk = [&](auto&& self, VertexRef v) -> void {
    if (v.level == from.level) {
      if (v.index == from.index) ++count;
      return;
    }
    for (std::uint32_t p : graph.predecessors(v)) self(self, VertexRef{v.level - 1, p});
  };
  if (from.level <= to.level) walk(walk, to);
  return count;
}

BigInt hook_length_dimension(std::span<const int> partition) {
  int boxes = 0;
  for (int part : partition) boxes += part;
  BigInt numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(boxes));
  BigInt hooks = 1;
  for (std::size_t row = 0; row < partition.size(); ++row) {
    for (int col = 0; col < partition[row]; ++col) {
      int below = 0;
      for (std::size_t r = row + 1; r < partition.size() && partition[r] > col; ++r) ++below;
      hooks *= partition[row] - col + below;
    }
  }
  return numerator / hooks;
}

std::vector<std::vector<BigInt>> pascal_rule_table(std::size_t rows) {
  std::vector<std::vector<BigInt>> table(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    table[n].assign(n + 1, BigInt(1));
    for (std::size_t k = 1; k < n; ++k) table[n][k] = table[n - 1][k - 1] + table[n - 1][k];
  }
  return table;
}

Rational hexagonal_distance(std::span<const int> a, std::span<const int> b, int n) {
  int l1 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) l1 += std::abs(a[i] - b[i]);
  Rational out(l1, 2 * n);
  out.canonicalize();
  return out;
}

std::vector<Rational> row_column_frequencies(std::span<const int> partition, int n) {
  std::vector<Rational> out(2 * static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < partition.size(); ++r) {
    out[r] = Rational(partition[r], n);
    out[r].canonicalize();
  }
  for (int c = 0; c < (partition.empty() ? 0 : partition[0]); ++c) {
    int height = 0;
    for (int part : partition) height += part > c ? 1 : 0;
    out[static_cast<std::size_t>(n + c)] = Rational(height, n);
    out[static_cast<std::size_t>(n + c)].canonicalize();
  }
  return out;
}

Rational l1_distance(std::span<const Rational> a, std::span<const Rational> b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += abs(a[i] - b[i]);
  return total;
}

namespace {

std::vector<double> average_ranks(std::span<const Rational> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t start = 0; start < order.size();) {
    std::size_t stop = start + 1;
    while (stop < order.size() && values[order[stop]] == values[order[start]]) ++stop;
    const double rank = 0.5 * static_cast<double>(start + stop - 1) + 1.0;
    for (std::size_t k = start; k < stop; ++k) ranks[order[k]] = rank;
    start = stop;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const Rational> x, std::span<const Rational> y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double count = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / count;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / count;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace bratteli::checks
