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
#include <span>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/discrete_measure.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/transport.hpp"

// Slow reference computations that share no code path with the library
// routines they are compared against.
namespace bratteli::checks {

// Minimum transport cost over every vertex of the transportation polytope.
// Vertices are found by trying every set of m + n - 1 cells that forms a
// spanning tree of the bipartite support graph and solving its flows by
// repeated leaf elimination. Exponential; keep supports at four points or
// fewer.
Rational brute_force_transport(const CostMatrix<Rational>& cost,
                               const DiscreteMeasure<Rational>& mu,
                               const DiscreteMeasure<Rational>& nu);

// Number of paths from `from` up to `to`, found by walking every one of
// them individually.
BigInt count_paths_by_walking(const GradedGraph& graph, VertexRef from, VertexRef to);

// Number of standard tableaux of a partition, by the hook-length formula.
BigInt hook_length_dimension(std::span<const int> partition);

// Binomial table built row by row with the additive Pascal rule;
// table[n][k] = C(n, k).
std::vector<std::vector<BigInt>> pascal_rule_table(std::size_t rows);

// Half the l1 norm of a - b, divided by n. For points of a common simplex
// level this is the norm whose unit ball is a regular hexagon.
Rational hexagonal_distance(std::span<const int> a, std::span<const int> b, int n);

// Row lengths and column lengths of a partition of n, each divided by n,
// concatenated and zero-padded to n entries apiece.
std::vector<Rational> row_column_frequencies(std::span<const int> partition, int n);

Rational l1_distance(std::span<const Rational> a, std::span<const Rational> b);

// Spearman rank correlation with average ranks for tied values. Returns 0
// when either side has no spread.
double spearman(std::span<const Rational> x, std::span<const Rational> y);

}  // namespace bratteli::checks
