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
#include <string_view>

#include "bratteli/arith.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/measures.hpp"

namespace bratteli {

// Path generators for the two-dimensional Pascal graph. An "up" step
// increments the first coordinate. Both throw ValidationError on any other
// graph.

// t_n = (floor(p n), n - floor(p n)), p in [0, 1].
FinitePath frequency_path(const GradedGraph& graph, const Rational& p, std::size_t depth);

inline constexpr std::size_t kDefaultOscillationBlock = 16;

// Up-step frequency alternates between `first` and `second` over blocks of
// lengths block, 2 block, 4 block, ...; inside a block of frequency f the
// t-th step goes up iff floor(f t) > floor(f (t - 1)).
FinitePath oscillating_path(const GradedGraph& graph, const Rational& first,
                            const Rational& second, std::size_t block, std::size_t depth);

// Whitespace-separated vertex indices, one per level starting at the root.
// '#' starts a comment that runs to the end of the line.
FinitePath parse_path_text(const GradedGraph& graph, std::string_view text);

// True when the graph looks like build_pascal(2, ...) output.
bool is_pascal2(const GradedGraph& graph);

}  // namespace bratteli
