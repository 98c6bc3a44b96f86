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

#include <random>

#include "bratteli/combinatorics.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/intrinsic.hpp"
#include "bratteli/io.hpp"
#include "bratteli/transport.hpp"

namespace bratteli {
namespace {

VertexRef vertex(const GradedGraph& g, std::size_t level, const char* label) {
  const auto v = g.find(level, label);
  EXPECT_TRUE(v) << label;
  return *v;
}

// Reference for the adjacent-level distance: a full transport solve between
// the point mass at u and the predecessor distribution of w.
Rational adjacent_by_transport(IntrinsicMetric<Rational>& metric, PathCounter& counter,
                               VertexRef u, VertexRef w) {
  const auto& rho = metric.level_metric(u.level);
  CostMatrix<Rational> cost(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = i + 1; j < rho.size(); ++j) cost.set(i, j, rho(i, j));
  }
  return kantorovich(cost, DiscreteMeasure<Rational>::dirac(u),
                     counter.predecessor_distribution(w))
      .value;
}

// Minimum over every explicitly listed path from z to v.
Rational path_minimum_by_enumeration(IntrinsicMetric<Rational>& metric, VertexRef z,
                                     VertexRef v, bool& found) {
  const GradedGraph& g = metric.graph();
  Rational best = 0;
  found = false;
  std::vector<VertexRef> stack{v};
  const auto walk = [&](auto&& self, VertexRef at) -> void {
    if (at.level == z.level) {
      if (at != z) return;
      Rational total = 0;
      for (std::size_t k = stack.size() - 1; k > 0; --k) {
        total += metric.adjacent_level_distance(stack[k], stack[k - 1]);
      }
      if (!found || total < best) best = total;
      found = true;
      return;
    }
    for (auto p : g.predecessors(at)) {
      stack.push_back({at.level - 1, p});
      self(self, stack.back());
      stack.pop_back();
    }
  };
  walk(walk, v);
  return best;
}

TEST(LevelMetric, PascalLevelTwoHalfStep) {
  const auto g = build_pascal(2, 2);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  const auto a = vertex(g, 2, "(0,2)");
  const auto b = vertex(g, 2, "(1,1)");
  EXPECT_EQ(metric.level_metric(2)(a.index, b.index), Rational(1, 2));
}

TEST(LevelMetric, BaseLevelIsDiscrete) {
  for (const auto& g : {build_pascal(2, 3), build_pascal(5, 2), build_young(4)}) {
    PathCounter counter(g);
    IntrinsicMetric<Rational> metric(g, counter);
    const auto& rho = metric.level_metric(1);
    for (std::size_t i = 0; i < rho.size(); ++i) {
      for (std::size_t j = 0; j < rho.size(); ++j) EXPECT_EQ(rho(i, j), i == j ? 0 : 1);
    }
    EXPECT_EQ(metric.level_metric(0).size(), 1u);
  }
}

TEST(LevelMetric, PascalIsometryThroughLevelThirty) {
  const auto g = build_pascal(2, 30);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto& rho = metric.level_metric(n);
    for (std::size_t i = 0; i < rho.size(); ++i) {
      for (std::size_t j = 0; j < rho.size(); ++j) {
        ASSERT_EQ(rho(i, j), ratio(static_cast<long>(i > j ? i - j : j - i),
                                   static_cast<long>(n)))
            << "level " << n << " pair " << i << "," << j;
      }
    }
  }
}

TEST(LevelMetric, FloatTracksExact) {
  for (const auto& g : {build_pascal(3, 8), build_young(9)}) {
    PathCounter counter(g);
    const std::size_t seed = first_branching_level(g);
    IntrinsicMetric<Rational> exact(g, counter, {seed, 0});
    IntrinsicMetric<double> approx(g, counter, {seed, 0});
    for (std::size_t n = 1; n <= g.depth(); ++n) {
      const auto& a = exact.level_metric(n);
      const auto& b = approx.level_metric(n);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(b(i, j), a(i, j).get_d(), 1e-12);
      }
    }
  }
}

TEST(LevelMetric, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (const auto& g : {build_pascal(2, 14), build_pascal(3, 7), build_pascal(4, 5),
                        build_young(8)}) {
    PathCounter counter(g);
    IntrinsicMetric<Rational> metric(g, counter, {first_branching_level(g), 0});
    for (std::size_t n = 1; n <= g.depth(); ++n) {
      const auto& rho = metric.level_metric(n);
      std::uniform_int_distribution<std::size_t> pick(0, rho.size() - 1);
      for (int t = 0; t < 300; ++t) {
        const auto a = pick(rng);
        const auto b = pick(rng);
        const auto c = pick(rng);
        EXPECT_EQ(rho(a, b), rho(b, a));
        EXPECT_EQ(rho(a, a), 0);
        EXPECT_GE(rho(a, b), 0);
        EXPECT_LE(rho(a, c), rho(a, b) + rho(b, c));
      }
    }
  }
}

TEST(LevelMetric, EqualPredecessorDistributionsGiveZero) {
  const auto g = build_young(9);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter, {2, 0});
  // The seed level itself is discrete, so start one above it.
  for (std::uint32_t n = 3; n <= 9; ++n) {
    const auto& rho = metric.level_metric(n);
    for (std::uint32_t i = 0; i < rho.size(); ++i) {
      for (std::uint32_t j = i + 1; j < rho.size(); ++j) {
        if (counter.predecessor_distribution({n, i}) == counter.predecessor_distribution({n, j})) {
          EXPECT_EQ(rho(i, j), 0);
        }
      }
    }
  }
}

TEST(LevelMetric, LiteralBaseLevelOnYoungIsDegenerate) {
  // Level 1 of the Young graph is a single vertex, so starting the
  // recursion there gives the zero semimetric on every level.
  const auto g = build_young(6);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  for (const auto& d : metric.diameter_profile(6)) EXPECT_EQ(d, 0);
  EXPECT_EQ(first_branching_level(g), 2u);
}

TEST(LevelMetric, SeedLevelZeroesLowerLevels) {
  const auto g = build_pascal(2, 6);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter, {3, 0});
  EXPECT_EQ(metric.level_metric(2).diameter(), 0);
  EXPECT_EQ(metric.level_metric(3)(0, 3), 1);
  EXPECT_EQ(metric.level_metric(3)(0, 1), 1);
  EXPECT_THROW(IntrinsicMetric<Rational>(g, counter, {0, 0}), BoundsError);
  EXPECT_THROW(IntrinsicMetric<Rational>(g, counter, {7, 0}), BoundsError);
}

TEST(LevelMetric, RetainedWindowEvictsOldLevels) {
  const auto g = build_pascal(2, 10);
  PathCounter counter(g);
  IntrinsicMetric<double> metric(g, counter, {1, 3});
  EXPECT_DOUBLE_EQ(metric.level_metric(10)(0, 10), 1.0);
  EXPECT_NO_THROW(metric.level_metric(8));
  EXPECT_THROW(metric.level_metric(7), BoundsError);
}

TEST(LevelMetric, RangeErrors) {
  const auto g = build_pascal(2, 3);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_THROW(metric.level_metric(4), BoundsError);
  EXPECT_THROW(metric.diameter_profile(4), BoundsError);
  const auto other = build_pascal(2, 3);
  EXPECT_THROW(IntrinsicMetric<Rational>(other, counter), ValidationError);
}

TEST(AdjacentLevelDistance, Examples) {
  const auto g = build_pascal(2, 3);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_EQ(metric.adjacent_level_distance(vertex(g, 1, "(1,0)"), vertex(g, 2, "(1,1)")),
            Rational(1, 2));
  EXPECT_EQ(metric.adjacent_level_distance(vertex(g, 1, "(1,0)"), vertex(g, 2, "(2,0)")), 0);
  EXPECT_EQ(metric.adjacent_level_distance(vertex(g, 1, "(0,1)"), vertex(g, 2, "(2,0)")), 1);
}

TEST(AdjacentLevelDistance, MatchesPointMassTransport) {
  for (const auto& g : {build_pascal(3, 6), build_young(7)}) {
    PathCounter counter(g);
    IntrinsicMetric<Rational> metric(g, counter, {first_branching_level(g), 0});
    for (std::uint32_t n = 0; n < g.depth(); ++n) {
      for (std::uint32_t u = 0; u < g.level_size(n); ++u) {
        for (std::uint32_t w = 0; w < g.level_size(n + 1); ++w) {
          EXPECT_EQ(metric.adjacent_level_distance({n, u}, {n + 1, w}),
                    adjacent_by_transport(metric, counter, {n, u}, {n + 1, w}));
        }
      }
    }
  }
}

TEST(AdjacentLevelDistance, RejectsNonAdjacentLevels) {
  const auto g = build_pascal(2, 3);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_THROW(metric.adjacent_level_distance({1, 0}, {3, 0}), BoundsError);
  EXPECT_THROW(metric.adjacent_level_distance({2, 0}, {1, 0}), BoundsError);
}

TEST(PathDistance, Examples) {
  const auto g = build_pascal(2, 3);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_EQ(metric.path_distance(GradedGraph::root(), vertex(g, 2, "(2,0)")), 0);
  const auto z = vertex(g, 1, "(1,0)");
  const auto w = vertex(g, 2, "(1,1)");
  EXPECT_EQ(metric.path_distance(z, w), metric.adjacent_level_distance(z, w));
  EXPECT_EQ(metric.path_distance(z, vertex(g, 3, "(1,2)")), Rational(2, 3));
}

TEST(PathDistance, MinimumOverEnumeratedPaths) {
  for (const auto& g : {build_pascal(2, 8), build_pascal(3, 6), build_young(8)}) {
    PathCounter counter(g);
    IntrinsicMetric<Rational> metric(g, counter, {first_branching_level(g), 0});
    for (std::uint32_t m = 0; m + 1 <= g.depth(); ++m) {
      for (std::uint32_t gap = 1; gap <= 4 && m + gap <= g.depth(); ++gap) {
        for (std::uint32_t z = 0; z < g.level_size(m); ++z) {
          for (std::uint32_t v = 0; v < g.level_size(m + gap); ++v) {
            bool found = false;
            const Rational expected =
                path_minimum_by_enumeration(metric, {m, z}, {m + gap, v}, found);
            if (found) {
              EXPECT_EQ(metric.path_distance({m, z}, {m + gap, v}), expected);
            } else {
              EXPECT_THROW(metric.path_distance({m, z}, {m + gap, v}), UnreachableError);
            }
          }
        }
      }
    }
  }
}

TEST(PathDistance, BatchMatchesSingleQueries) {
  const auto g = build_young(9);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter, {2, 0});
  const VertexRef z = vertex(g, 2, "(1,1)");
  const std::vector<VertexRef> targets{vertex(g, 3, "(2,1)"), vertex(g, 5, "(3,1,1)"),
                                       vertex(g, 9, "(3,3,2,1)")};
  const auto batch = metric.path_distances(z, targets);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    EXPECT_EQ(batch[k], metric.path_distance(z, targets[k]));
  }
  const std::vector<VertexRef> unordered{targets[1], targets[0]};
  EXPECT_THROW(metric.path_distances(z, unordered), BoundsError);
}

TEST(PathDistance, UnreachableTarget) {
  const auto g = build_pascal(2, 3);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_THROW(metric.path_distance(vertex(g, 1, "(0,1)"), vertex(g, 2, "(2,0)")),
               UnreachableError);
  EXPECT_THROW(metric.path_distance(vertex(g, 2, "(1,1)"), vertex(g, 1, "(1,0)")), BoundsError);
}

TEST(ZeroClasses, SharedPredecessorDistributionsMerge) {
  const auto g = load_graph(R"({"levels": [["r"], ["a", "b"], ["c", "d", "e"]],
                                "edges": [[[]], [[0], [0]], [[0, 1], [0, 1], [1]]]})");
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  const auto q = metric.zero_classes(2);
  EXPECT_EQ(q.level, 2u);
  EXPECT_EQ(q.classes, (std::vector<std::vector<std::uint32_t>>{{0, 1}, {2}}));
}

TEST(ZeroClasses, PascalLevelsAreSingletons) {
  const auto g = build_pascal(2, 20);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto q = metric.zero_classes(n);
    EXPECT_EQ(q.classes.size(), n + 1);
  }
}

TEST(ZeroClasses, BaseLevelIsSingletons) {
  const auto g = build_pascal(4, 2);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_EQ(metric.zero_classes(1).classes.size(), 4u);
}

TEST(ZeroClasses, FloatModeRefuses) {
  const auto g = build_pascal(2, 3);
  PathCounter counter(g);
  IntrinsicMetric<double> metric(g, counter);
  EXPECT_THROW(metric.zero_classes(2), ModeError);
}

TEST(DiameterProfile, PascalStaysAtOne) {
  const auto g = build_pascal(2, 5);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_EQ(metric.diameter_profile(5), std::vector<Rational>(5, Rational(1)));
}

TEST(DiameterProfile, SingletonLevelsHaveZeroDiameter) {
  const auto g = load_graph(R"({"levels": [["r"], ["a"], ["b"], ["c"]],
                                "edges": [[[]], [[0]], [[0]], [[0]]]})");
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_EQ(metric.diameter_profile(3), std::vector<Rational>(3, Rational(0)));
}

TEST(DiameterProfile, YoungIsNonIncreasingFromTheBaseLevel) {
  const auto g = build_young(8);
  PathCounter counter(g);
  for (std::size_t seed : {std::size_t{1}, first_branching_level(g)}) {
    IntrinsicMetric<Rational> metric(g, counter, {seed, 0});
    const auto profile = metric.diameter_profile(8);
    for (std::size_t n = seed; n < 8; ++n) EXPECT_LE(profile[n], profile[n - 1]) << n;
  }
}

}  // namespace
}  // namespace bratteli
