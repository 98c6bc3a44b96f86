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

#include "bratteli/checks/generators.hpp"

#include <algorithm>
#include <numeric>

namespace bratteli::checks {

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

DiscreteMeasure<Rational> random_measure(Rng& rng, std::size_t points, std::size_t max_support,
                                         int max_den) {
  const std::size_t size =
      uniform_index(rng, 1, std::min({points, max_support, static_cast<std::size_t>(max_den)}));
  std::vector<std::uint32_t> all(points);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<std::uint32_t> support(all.begin(), all.begin() + static_cast<long>(size));
  std::sort(support.begin(), support.end());

  // Split den into `size` positive parts by choosing distinct cut points.
  const auto den = static_cast<int>(uniform_index(rng, size, static_cast<std::size_t>(max_den)));
  std::vector<int> cuts(static_cast<std::size_t>(den - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(size - 1);
  cuts.push_back(0);
  cuts.push_back(den);
  std::sort(cuts.begin(), cuts.end());

  DiscreteMeasure<Rational> out;
  out.support = std::move(support);
  for (std::size_t k = 0; k < size; ++k) {
    Rational w(cuts[k + 1] - cuts[k], den);
    w.canonicalize();
    out.weights.push_back(w);
  }
  return out;
}

CostMatrix<Rational> random_semimetric(Rng& rng, std::size_t points, int max_num, int den) {
  CostMatrix<Rational> cost(points);
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = i + 1; j < points; ++j) {
      Rational c(static_cast<long>(uniform_index(rng, 0, static_cast<std::size_t>(max_num))), den);
      c.canonicalize();
      cost.set(i, j, c);
    }
  }
  return cost;
}

CostMatrix<Rational> random_metric(Rng& rng, std::size_t points, int max_num, int den) {
  std::vector<Rational> d(points * points);
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = i + 1; j < points; ++j) {
      Rational c(static_cast<long>(uniform_index(rng, 1, static_cast<std::size_t>(max_num))), den);
      c.canonicalize();
      d[i * points + j] = c;
      d[j * points + i] = c;
    }
  }
  for (std::size_t k = 0; k < points; ++k) {
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t j = 0; j < points; ++j) {
        const Rational through = d[i * points + k] + d[k * points + j];
        if (through < d[i * points + j]) d[i * points + j] = through;
      }
    }
  }
  return CostMatrix<Rational>(points, std::move(d));
}

std::vector<Rational> random_positions(Rng& rng, std::size_t count, int max_den) {
  std::vector<Rational> out;
  Rational at(static_cast<long>(uniform_index(rng, 0, 4)) - 2);
  for (std::size_t k = 0; k < count; ++k) {
    Rational step(static_cast<long>(uniform_index(rng, 1, 5)),
                  static_cast<long>(uniform_index(rng, 1, static_cast<std::size_t>(max_den))));
    step.canonicalize();
    at += step;
    out.push_back(at);
  }
  return out;
}

}  // namespace bratteli::checks
