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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/discrete_measure.hpp"
#include "bratteli/errors.hpp"

namespace bratteli {

// Symmetric, nonnegative cost over `size()` abstract points with a zero
// diagonal. Distinct points may sit at distance zero; the triangle
// inequality is not required.
template <Scalar T>
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(std::size_t size) : size_(size), data_(size * size, T(0)) {}

  // Row-major `size * size` entries; throws ValidationError on asymmetry,
  // negative entries or a nonzero diagonal.
  CostMatrix(std::size_t size, std::vector<T> data) : size_(size), data_(std::move(data)) {
    if (data_.size() != size_ * size_) {
      throw ValidationError("cost matrix needs " + std::to_string(size_ * size_) +
                            " entries, got " + std::to_string(data_.size()));
    }
    for (std::size_t i = 0; i < size_; ++i) {
      if (!is_zero((*this)(i, i))) throw ValidationError("cost matrix diagonal must be zero");
      for (std::size_t j = 0; j < size_; ++j) {
        if ((*this)(i, j) < 0) throw ValidationError("cost matrix has a negative entry");
        if ((*this)(i, j) != (*this)(j, i)) throw ValidationError("cost matrix is not symmetric");
      }
    }
  }

  std::size_t size() const { return size_; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  void set(std::size_t i, std::size_t j, const T& value) {
    data_[i * size_ + j] = value;
    data_[j * size_ + i] = value;
  }

 private:
  std::size_t size_ = 0;
  std::vector<T> data_;
};

// A feasible coupling: entries (source point, target point, mass) with
// positive mass, sorted by (source, target).
template <Scalar T>
struct TransportPlan {
  struct Entry {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    T mass{};
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
  T objective{};
};

template <Scalar T>
struct TransportResult {
  T value{};
  TransportPlan<T> plan;
};

// Primal network simplex for the transportation problem on the complete
// bipartite graph between two supports.
//
// Starts from the north-west corner basis (a spanning tree with
// m + n - 1 cells, degenerate cells included), prices with node
// potentials, and pivots with the smallest-index rule for both the entering
// and the leaving cell. Buffers are reused across calls.
template <Scalar T>
class TransportSolver {
 public:
  struct Cell {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    T flow{};
  };

  // `cost(i, j)` is the unit cost from supply i to demand j. Returns the
  // optimal objective. Supplies and demands must have equal totals.
  template <class CostFn>
  const T& solve(std::span<const T> supply, std::span<const T> demand, CostFn&& cost);

  std::span<const Cell> basis() const { return basis_; }
  std::size_t pivots() const { return pivots_; }
  const T& value() const { return value_; }

 private:
  void compute_potentials(std::size_t m, std::size_t n);
  bool find_cycle(std::size_t m, std::uint32_t row, std::uint32_t col);

  std::vector<Cell> basis_;
  std::vector<T> costs_;
  std::vector<T> remaining_supply_;
  std::vector<T> remaining_demand_;
  std::vector<T> potential_;  // rows then columns
  std::vector<char> known_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> adjacency_offsets_;
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::int32_t> parent_slot_;
  std::vector<std::uint32_t> cycle_;
  std::vector<std::uint32_t> basis_index_;
  T value_{};
  T scratch_{};
  std::size_t pivots_ = 0;
};

// Minimal transport cost between two measures over `cost`, with one
// optimal plan. Measures are validated first (ValidationError when they are
// not normalized or their supports leave the cost's point set).
template <Scalar T>
TransportResult<T> kantorovich(const CostMatrix<T>& cost, const DiscreteMeasure<T>& mu,
                               const DiscreteMeasure<T>& nu);

// Wasserstein-1 distance on the line, from cumulative distribution
// differences. `positions` must be strictly increasing; measure supports
// index into it.
Rational line_transport_oracle(std::span<const Rational> positions,
                               const DiscreteMeasure<Rational>& mu,
                               const DiscreteMeasure<Rational>& nu);

// ---------------------------------------------------------------------------

template <Scalar T>
void TransportSolver<T>::compute_potentials(std::size_t m, std::size_t n) {
  const std::size_t nodes = m + n;
  degree_.assign(nodes, 0);
  for (const auto& c : basis_) {
    ++degree_[c.row];
    ++degree_[m + c.col];
  }
  adjacency_offsets_.assign(nodes + 1, 0);
  for (std::size_t k = 0; k < nodes; ++k) {
    adjacency_offsets_[k + 1] = adjacency_offsets_[k] + degree_[k];
  }
  adjacency_.resize(adjacency_offsets_[nodes]);
  std::fill(degree_.begin(), degree_.end(), 0);
  for (std::uint32_t s = 0; s < basis_.size(); ++s) {
    const auto r = basis_[s].row;
    const auto c = static_cast<std::uint32_t>(m + basis_[s].col);
    adjacency_[adjacency_offsets_[r] + degree_[r]++] = s;
    adjacency_[adjacency_offsets_[c] + degree_[c]++] = s;
  }
  potential_.resize(nodes);
  known_.assign(nodes, 0);
  queue_.clear();
  potential_[0] = T(0);
  known_[0] = 1;
  queue_.push_back(0);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const std::uint32_t node = queue_[head];
    for (std::uint32_t k = adjacency_offsets_[node]; k < adjacency_offsets_[node + 1]; ++k) {
      const Cell& cell = basis_[adjacency_[k]];
      const std::uint32_t row = cell.row;
      const auto col = static_cast<std::uint32_t>(m + cell.col);
      const T& c = costs_[cell.row * n + cell.col];
      if (!known_[row]) {
        potential_[row] = c;
        potential_[row] -= potential_[col];
        known_[row] = 1;
        queue_.push_back(row);
      } else if (!known_[col]) {
        potential_[col] = c;
        potential_[col] -= potential_[row];
        known_[col] = 1;
        queue_.push_back(col);
      }
    }
  }
}

// Collects into cycle_ the basis slots on the tree path from column node
// `col` back to row node `row`, ordered from the column end.
template <Scalar T>
bool TransportSolver<T>::find_cycle(std::size_t m, std::uint32_t row, std::uint32_t col) {
  const std::size_t nodes = known_.size();
  parent_slot_.assign(nodes, -1);
  known_.assign(nodes, 0);
  queue_.clear();
  queue_.push_back(row);
  known_[row] = 1;
  const auto target = static_cast<std::uint32_t>(m + col);
  for (std::size_t head = 0; head < queue_.size() && !known_[target]; ++head) {
    const std::uint32_t node = queue_[head];
    for (std::uint32_t k = adjacency_offsets_[node]; k < adjacency_offsets_[node + 1]; ++k) {
      const std::uint32_t slot = adjacency_[k];
      const Cell& cell = basis_[slot];
      const std::uint32_t other =
          node == cell.row ? static_cast<std::uint32_t>(m + cell.col) : cell.row;
      if (known_[other]) continue;
      known_[other] = 1;
      parent_slot_[other] = static_cast<std::int32_t>(slot);
      queue_.push_back(other);
    }
  }
  if (!known_[target]) return false;
  cycle_.clear();
  std::uint32_t node = target;
  while (node != row) {
    const auto slot = static_cast<std::uint32_t>(parent_slot_[node]);
    cycle_.push_back(slot);
    const Cell& cell = basis_[slot];
    node = node == cell.row ? static_cast<std::uint32_t>(m + cell.col) : cell.row;
  }
  return true;
}

template <Scalar T>
template <class CostFn>
const T& TransportSolver<T>::solve(std::span<const T> supply, std::span<const T> demand,
                                   CostFn&& cost) {
  const std::size_t m = supply.size();
  const std::size_t n = demand.size();
  if (m == 0 || n == 0) throw ValidationError("transport needs nonempty supports");
  pivots_ = 0;
  costs_.resize(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) costs_[i * n + j] = cost(i, j);
  }

  // North-west corner basis.
  basis_.clear();
  remaining_supply_.assign(supply.begin(), supply.end());
  remaining_demand_.assign(demand.begin(), demand.end());
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    if (i + 1 == m && j + 1 == n) {
      T last = remaining_supply_[i];
      if (last < 0) last = T(0);
      basis_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), last});
      break;
    }
    const bool advance_row =
        i + 1 < m && (j + 1 == n || remaining_supply_[i] <= remaining_demand_[j]);
    if (advance_row) {
      T x = remaining_supply_[i];
      if (x < 0) x = T(0);
      remaining_demand_[j] -= x;
      basis_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), x});
      ++i;
    } else {
      T x = remaining_demand_[j];
      if (x < 0) x = T(0);
      remaining_supply_[i] -= x;
      basis_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), x});
      ++j;
    }
  }

  if (m > 1 && n > 1) {
    T tolerance(0);
    if constexpr (std::same_as<T, double>) {
      double scale = 1.0;
      for (double c : costs_) scale = std::max(scale, std::abs(c));
      tolerance = 1e-14 * scale;
    }
    basis_index_.assign(m * n, 0);
    const std::size_t max_pivots = 1000 + 50 * (m + n) * m * n;
    while (true) {
      compute_potentials(m, n);
      std::fill(basis_index_.begin(), basis_index_.end(), 0);
      for (const auto& c : basis_) basis_index_[c.row * n + c.col] = 1;
      std::size_t entering = m * n;
      for (std::size_t idx = 0; idx < m * n; ++idx) {
        if (basis_index_[idx]) continue;
        scratch_ = costs_[idx];
        scratch_ -= potential_[idx / n];
        scratch_ -= potential_[m + idx % n];
        if (scratch_ < -tolerance) {
          entering = idx;
          break;
        }
      }
      if (entering == m * n) break;
      if (++pivots_ > max_pivots) {
        throw ComputationError("transport simplex exceeded its pivot budget");
      }
      const auto row = static_cast<std::uint32_t>(entering / n);
      const auto col = static_cast<std::uint32_t>(entering % n);
      if (!find_cycle(m, row, col)) {
        throw ComputationError("transport basis is not a spanning tree");
      }
      // Cells alternate -, +, -, ... starting at the column end; the path has
      // odd length so the last one (touching `row`) is also a minus cell.
      std::size_t leaving = cycle_.size();
      for (std::size_t k = 0; k < cycle_.size(); k += 2) {
        const Cell& c = basis_[cycle_[k]];
        if (leaving == cycle_.size()) {
          leaving = k;
          continue;
        }
        const Cell& best = basis_[cycle_[leaving]];
        if (c.flow < best.flow ||
            (c.flow == best.flow && c.row * n + c.col < best.row * n + best.col)) {
          leaving = k;
        }
      }
      const T theta = basis_[cycle_[leaving]].flow;
      if (!is_zero(theta)) {
        for (std::size_t k = 0; k < cycle_.size(); ++k) {
          if (k % 2 == 0) {
            basis_[cycle_[k]].flow -= theta;
          } else {
            basis_[cycle_[k]].flow += theta;
          }
        }
      }
      basis_[cycle_[leaving]] = Cell{row, col, theta};
    }
  }

  value_ = T(0);
  for (const auto& c : basis_) {
    if (is_zero(c.flow)) continue;
    scratch_ = c.flow;
    scratch_ *= costs_[c.row * n + c.col];
    value_ += scratch_;
  }
  return value_;
}

template <Scalar T>
TransportResult<T> kantorovich(const CostMatrix<T>& cost, const DiscreteMeasure<T>& mu,
                               const DiscreteMeasure<T>& nu) {
  validate_measure(mu);
  validate_measure(nu);
  for (const auto* m : {&mu, &nu}) {
    if (m->support.back() >= cost.size()) {
      throw ValidationError("measure support point " + std::to_string(m->support.back()) +
                            " is outside the cost matrix (" + std::to_string(cost.size()) +
                            " points)");
    }
  }
  TransportResult<T> result;
  if (mu.support == nu.support && mu.weights == nu.weights) {
    for (std::size_t k = 0; k < mu.size(); ++k) {
      result.plan.entries.push_back({mu.support[k], mu.support[k], mu.weights[k]});
    }
    result.value = T(0);
    result.plan.objective = T(0);
    return result;
  }
  TransportSolver<T> solver;
  solver.solve(std::span<const T>(mu.weights), std::span<const T>(nu.weights),
               [&](std::size_t i, std::size_t j) -> const T& {
                 return cost(mu.support[i], nu.support[j]);
               });
  result.value = solver.value();
  result.plan.objective = solver.value();
  for (const auto& c : solver.basis()) {
    if (!(c.flow > 0)) continue;
    result.plan.entries.push_back({mu.support[c.row], nu.support[c.col], c.flow});
  }
  std::sort(result.plan.entries.begin(), result.plan.entries.end(),
            [](const auto& a, const auto& b) {
              return std::pair(a.source, a.target) < std::pair(b.source, b.target);
            });
  return result;
}

}  // namespace bratteli
