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

#include <gtest/gtest.h>

#include "bratteli/errors.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/paths.hpp"

namespace bratteli {
namespace {

std::vector<int> first_coordinates(const GradedGraph& g, const FinitePath& p) {
  std::vector<int> out;
  for (std::size_t n = 0; n <= p.length(); ++n) out.push_back((*parse_tuple_label(g.label(p.at(n))))[0]);
  return out;
}

TEST(FrequencyPath, FollowsFloorOfPn) {
  const auto g = build_pascal(2, 30);
  const auto p = frequency_path(g, Rational(1, 3), 30);
  const auto ups = first_coordinates(g, p);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(ups[n], n / 3);
  EXPECT_EQ(p.length(), 30u);
}

TEST(FrequencyPath, RejectsBadInput) {
  const auto g = build_pascal(2, 10);
  EXPECT_THROW(frequency_path(g, Rational(3, 2), 10), ValidationError);
  EXPECT_THROW(frequency_path(g, Rational(-1, 2), 10), ValidationError);
  EXPECT_THROW(frequency_path(g, Rational(1, 2), 11), BoundsError);
  EXPECT_THROW(frequency_path(build_pascal(3, 4), Rational(1, 2), 4), ValidationError);
  EXPECT_THROW(frequency_path(build_young(4), Rational(1, 2), 4), ValidationError);
}

TEST(OscillatingPath, BlocksDoubleAndFrequenciesAlternate) {
  const auto g = build_pascal(2, 60);
  const auto p = oscillating_path(g, Rational(1, 4), Rational(3, 4), 4, 60);
  const auto ups = first_coordinates(g, p);
  // Blocks: [1,4] at 1/4, [5,12] at 3/4, [13,28] at 1/4, [29,60] at 3/4.
  EXPECT_EQ(ups[4], 1);
  EXPECT_EQ(ups[12], 1 + 6);
  EXPECT_EQ(ups[28], 7 + 4);
  EXPECT_EQ(ups[60], 11 + 24);
  for (std::size_t n = 1; n <= 60; ++n) EXPECT_LE(ups[n] - ups[n - 1], 1);
}

TEST(OscillatingPath, RejectsZeroBlock) {
  const auto g = build_pascal(2, 10);
  EXPECT_THROW(oscillating_path(g, Rational(1, 3), Rational(2, 3), 0, 10), BoundsError);
}

TEST(ParsePathText, IndicesCommasAndComments) {
  const auto g = build_pascal(2, 3);
  const auto p = parse_path_text(g, "# a path\n0\n1, 1 # (1,1)\n2\n");
  EXPECT_EQ(std::vector<std::uint32_t>(p.indices().begin(), p.indices().end()),
            (std::vector<std::uint32_t>{0, 1, 1, 2}));
  EXPECT_THROW(parse_path_text(g, "0 x"), ValidationError);
  EXPECT_THROW(parse_path_text(g, "0 0 2"), ValidationError);
  EXPECT_THROW(parse_path_text(g, ""), ValidationError);
}

}  // namespace
}  // namespace bratteli
