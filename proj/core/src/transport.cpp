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

#include "bratteli/transport.hpp"

namespace bratteli {

template class TransportSolver<Rational>;
template class TransportSolver<double>;

Rational line_transport_oracle(std::span<const Rational> positions,
                               const DiscreteMeasure<Rational>& mu,
                               const DiscreteMeasure<Rational>& nu) {
  for (std::size_t k = 1; k < positions.size(); ++k) {
    if (!(positions[k - 1] < positions[k])) {
      throw ValidationError("line positions must be strictly increasing");
    }
  }
  validate_measure(mu);
  validate_measure(nu);
  if (mu.support.back() >= positions.size() || nu.support.back() >= positions.size()) {
    throw ValidationError("measure support lies outside the line positions");
  }
  Rational cdf_gap(0);
  Rational total(0);
  Rational term;
  for (std::size_t k = 0; k + 1 < positions.size(); ++k) {
    const auto point = static_cast<std::uint32_t>(k);
    cdf_gap += mu.mass_at(point);
    cdf_gap -= nu.mass_at(point);
    term = abs(cdf_gap);
    term *= positions[k + 1] - positions[k];
    total += term;
  }
  return total;
}

}  // namespace bratteli
