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
#include <random>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/discrete_measure.hpp"
#include "bratteli/transport.hpp"

// Random inputs for property sweeps. Every generator draws only from the
// engine it is handed, so a fixed seed replays the same sequence.
namespace bratteli::checks {

using Rng = std::mt19937_64;

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);

// Measure on `points` abstract points with between 1 and `max_support`
// support points. Weights share one denominator no larger than `max_den`.
DiscreteMeasure<Rational> random_measure(Rng& rng, std::size_t points, std::size_t max_support,
                                         int max_den);

// Symmetric cost with zero diagonal and entries k / den for k in [0, max_num].
// Off-diagonal zeros are allowed.
CostMatrix<Rational> random_semimetric(Rng& rng, std::size_t points, int max_num, int den);

// Shortest-path closure of random positive weights, so the triangle
// inequality holds.
CostMatrix<Rational> random_metric(Rng& rng, std::size_t points, int max_num, int den);

// Strictly increasing rationals with denominators up to `max_den`.
std::vector<Rational> random_positions(Rng& rng, std::size_t count, int max_den);

}  // namespace bratteli::checks
