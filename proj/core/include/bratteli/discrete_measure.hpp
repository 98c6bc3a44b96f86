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
#include <string>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/graph.hpp"

namespace bratteli {

// Finitely supported probability measure on one level (or on an abstract
// finite point set, when `level` is irrelevant). Support indices are
// strictly increasing; weights are positive and sum to one.
template <Scalar T>
struct DiscreteMeasure {
  std::size_t level = 0;
  std::vector<std::uint32_t> support;
  std::vector<T> weights;

  static DiscreteMeasure dirac(VertexRef v) {
    return DiscreteMeasure{v.level, {v.index}, {T(1)}};
  }

  std::size_t size() const { return support.size(); }

  // Weight at point `index`; zero when outside the support.
  T mass_at(std::uint32_t index) const {
    const auto it = std::lower_bound(support.begin(), support.end(), index);
    if (it == support.end() || *it != index) return T(0);
    return weights[static_cast<std::size_t>(it - support.begin())];
  }

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;
};

inline constexpr double kFloatMassTolerance = 1e-12;

// Throws ValidationError unless the support is sorted and distinct, weights
// are positive, and they sum to one (exactly, or within kFloatMassTolerance).
template <Scalar T>
void validate_measure(const DiscreteMeasure<T>& m) {
  if (m.support.size() != m.weights.size()) {
    throw ValidationError("measure support and weights differ in length");
  }
  if (m.support.empty()) throw ValidationError("measure has empty support");
  T total(0);
  for (std::size_t i = 0; i < m.support.size(); ++i) {
    if (i > 0 && m.support[i] <= m.support[i - 1]) {
      throw ValidationError("measure support is not strictly increasing");
    }
    if (!(m.weights[i] > 0)) {
      throw ValidationError("measure weight at point " + std::to_string(m.support[i]) +
                            " is not positive");
    }
    total += m.weights[i];
  }
  if constexpr (std::same_as<T, Rational>) {
    if (total != 1) {
      throw ValidationError("measure is not normalized (total mass " +
                            format_rational(total) + ")");
    }
  } else {
    if (std::abs(total - 1.0) > kFloatMassTolerance) {
      throw ValidationError("measure is not normalized (total mass " +
                            format_double(total) + ")");
    }
  }
}

inline DiscreteMeasure<double> to_float(const DiscreteMeasure<Rational>& m) {
  DiscreteMeasure<double> out{m.level, m.support, {}};
  out.weights.reserve(m.weights.size());
  for (const auto& w : m.weights) out.weights.push_back(to_double(w));
  return out;
}

template <Scalar T>
DiscreteMeasure<T> convert_measure(const DiscreteMeasure<Rational>& m) {
  if constexpr (std::same_as<T, Rational>) {
    return m;
  } else {
    return to_float(m);
  }
}

}  // namespace bratteli
