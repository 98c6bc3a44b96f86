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

#include <cmath>
#include <map>

#include "bratteli/checks/generators.hpp"
#include "bratteli/checks/oracles.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/transport.hpp"

namespace bratteli {
namespace {

using checks::Rng;
using M = DiscreteMeasure<Rational>;

M measure(std::vector<std::uint32_t> support, std::vector<Rational> weights) {
  return M{0, std::move(support), std::move(weights)};
}

template <Scalar T>
void expect_marginals(const TransportResult<T>& r, const DiscreteMeasure<T>& mu,
                      const DiscreteMeasure<T>& nu) {
  std::map<std::uint32_t, T> rows;
  std::map<std::uint32_t, T> cols;
  for (const auto& e : r.plan.entries) {
    EXPECT_TRUE(e.mass > 0);
    rows[e.source] += e.mass;
    cols[e.target] += e.mass;
  }
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if constexpr (std::same_as<T, Rational>) {
      EXPECT_EQ(rows[mu.support[k]], mu.weights[k]);
    } else {
      EXPECT_NEAR(rows[mu.support[k]], mu.weights[k], 1e-12);
    }
  }
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if constexpr (std::same_as<T, Rational>) {
      EXPECT_EQ(cols[nu.support[k]], nu.weights[k]);
    } else {
      EXPECT_NEAR(cols[nu.support[k]], nu.weights[k], 1e-12);
    }
  }
}

TEST(Kantorovich, EqualMeasuresCostNothingWithIdentityPlan) {
  Rng rng(1);
  const auto cost = checks::random_semimetric(rng, 5, 9, 2);
  const auto mu = measure({0, 2, 4}, {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  const auto r = kantorovich(cost, mu, mu);
  EXPECT_EQ(r.value, 0);
  ASSERT_EQ(r.plan.entries.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(r.plan.entries[k].source, mu.support[k]);
    EXPECT_EQ(r.plan.entries[k].target, mu.support[k]);
    EXPECT_EQ(r.plan.entries[k].mass, mu.weights[k]);
  }
}

TEST(Kantorovich, PointMassesCostTheirDistance) {
  CostMatrix<Rational> cost(3);
  cost.set(0, 1, Rational(5, 7));
  cost.set(0, 2, 2);
  cost.set(1, 2, Rational(1, 3));
  const auto r = kantorovich(cost, M::dirac({0, 0}), M::dirac({0, 2}));
  EXPECT_EQ(r.value, 2);
  ASSERT_EQ(r.plan.entries.size(), 1u);
  EXPECT_EQ(r.plan.entries[0].mass, 1);
}

TEST(Kantorovich, TwoPointExample) {
  CostMatrix<Rational> cost(2);
  cost.set(0, 1, 1);
  const auto mu = measure({0, 1}, {Rational(2, 3), Rational(1, 3)});
  const auto nu = measure({0, 1}, {Rational(1, 3), Rational(2, 3)});
  const auto r = kantorovich(cost, mu, nu);
  EXPECT_EQ(r.value, Rational(1, 3));
  // Plans form the family c_00 = t, c_01 = 2/3 - t, c_10 = 1/3 - t,
  // c_11 = 1/3 + t for t in [0, 1/3]; cost 1 - 2t is smallest at t = 1/3.
  Rational best = 1;
  for (int step = 0; step <= 12; ++step) {
    const Rational t(step, 36);
    const Rational c = Rational(2, 3) - t + Rational(1, 3) - t;
    if (c < best) best = c;
  }
  EXPECT_EQ(r.value, best);
  EXPECT_EQ(r.value, checks::brute_force_transport(cost, mu, nu));
  expect_marginals(r, mu, nu);
}

TEST(Kantorovich, ZeroCostPairsAreLegal) {
  CostMatrix<Rational> cost(3);
  cost.set(0, 1, 0);
  cost.set(0, 2, 1);
  cost.set(1, 2, 1);
  const auto r = kantorovich(cost, M::dirac({0, 0}), M::dirac({0, 1}));
  EXPECT_EQ(r.value, 0);
}

TEST(Kantorovich, RejectsBadInputs) {
  CostMatrix<Rational> cost(2);
  cost.set(0, 1, 1);
  const auto ok = M::dirac({0, 0});
  EXPECT_THROW(kantorovich(cost, measure({0, 1}, {Rational(1, 2), Rational(1, 3)}), ok),
               ValidationError);
  EXPECT_THROW(kantorovich(cost, ok, M::dirac({0, 2})), ValidationError);
  EXPECT_THROW(kantorovich(cost, measure({1, 0}, {Rational(1, 2), Rational(1, 2)}), ok),
               ValidationError);
  EXPECT_THROW(kantorovich(cost, measure({0, 1}, {Rational(1), Rational(0)}), ok),
               ValidationError);
  EXPECT_THROW(CostMatrix<Rational>(2, {0, 1, 2, 0}), ValidationError);
  EXPECT_THROW(CostMatrix<Rational>(2, {1, 1, 1, 0}), ValidationError);
  EXPECT_THROW(CostMatrix<Rational>(2, {0, -1, -1, 0}), ValidationError);
  EXPECT_THROW(CostMatrix<Rational>(2, {0, 1, 1}), ValidationError);
}

TEST(LineOracle, Examples) {
  const std::vector<Rational> two{0, 1};
  EXPECT_EQ(line_transport_oracle(two, M::dirac({0, 0}), M::dirac({0, 0})), 0);
  EXPECT_EQ(line_transport_oracle(two, M::dirac({0, 0}), M::dirac({0, 1})), 1);
  const std::vector<Rational> three{0, Rational(1, 2), 1};
  const auto split = measure({0, 2}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(line_transport_oracle(three, M::dirac({0, 1}), split), Rational(1, 2));
}

TEST(LineOracle, RejectsUnsortedOrDuplicatePositions) {
  const auto mu = M::dirac({0, 0});
  EXPECT_THROW(line_transport_oracle(std::vector<Rational>{1, 0}, mu, mu), ValidationError);
  EXPECT_THROW(line_transport_oracle(std::vector<Rational>{0, 0}, mu, mu), ValidationError);
  EXPECT_THROW(line_transport_oracle(std::vector<Rational>{0}, M::dirac({0, 1}), mu),
               ValidationError);
}

TEST(KantorovichProperty, MatchesPolytopeVertexEnumeration) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t points = checks::uniform_index(rng, 1, 6);
    const auto cost = checks::random_semimetric(rng, points, 12, 4);
    const auto mu = checks::random_measure(rng, points, 4, 12);
    const auto nu = checks::random_measure(rng, points, 4, 12);
    const auto r = kantorovich(cost, mu, nu);
    ASSERT_EQ(r.value, checks::brute_force_transport(cost, mu, nu)) << "instance " << t;
    EXPECT_EQ(r.plan.objective, r.value);
    expect_marginals(r, mu, nu);
  }
}

TEST(KantorovichProperty, MatchesLineOracle) {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const std::size_t points = checks::uniform_index(rng, 1, 10);
    const auto pos = checks::random_positions(rng, points, 7);
    CostMatrix<Rational> cost(points);
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t j = i + 1; j < points; ++j) cost.set(i, j, pos[j] - pos[i]);
    }
    const auto mu = checks::random_measure(rng, points, 10, 24);
    const auto nu = checks::random_measure(rng, points, 10, 24);
    ASSERT_EQ(kantorovich(cost, mu, nu).value, line_transport_oracle(pos, mu, nu))
        << "instance " << t;
  }
}

TEST(KantorovichProperty, SymmetricBoundedAndTriangular) {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t points = checks::uniform_index(rng, 2, 9);
    const auto cost = checks::random_metric(rng, points, 10, 3);
    const auto a = checks::random_measure(rng, points, 6, 30);
    const auto b = checks::random_measure(rng, points, 6, 30);
    const auto c = checks::random_measure(rng, points, 6, 30);
    const auto ab = kantorovich(cost, a, b).value;
    EXPECT_EQ(ab, kantorovich(cost, b, a).value);
    EXPECT_LE(kantorovich(cost, a, c).value, ab + kantorovich(cost, b, c).value);
    Rational diameter = 0;
    for (auto i : a.support) {
      for (auto j : b.support) diameter = std::max(diameter, cost(i, j));
    }
    EXPECT_LE(ab, diameter);
  }
}

TEST(KantorovichProperty, FloatAgreesWithExact) {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t points = checks::uniform_index(rng, 2, 24);
    const auto cost = checks::random_semimetric(rng, points, 50, 7);
    const auto mu = checks::random_measure(rng, points, 24, 97);
    const auto nu = checks::random_measure(rng, points, 24, 97);
    CostMatrix<double> fcost(points);
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t j = i + 1; j < points; ++j) fcost.set(i, j, cost(i, j).get_d());
    }
    const auto exact = kantorovich(cost, mu, nu);
    const auto fmu = to_float(mu);
    const auto fnu = to_float(nu);
    const auto approx = kantorovich(fcost, fmu, fnu);
    EXPECT_NEAR(approx.value, exact.value.get_d(), 1e-12) << "instance " << t;
    expect_marginals(approx, fmu, fnu);
    expect_marginals(exact, mu, nu);
  }
}

TEST(TransportSolver, ReusableAcrossProblemsOfDifferentShapes) {
  TransportSolver<Rational> solver;
  const std::vector<Rational> a{Rational(1, 2), Rational(1, 2)};
  const std::vector<Rational> b{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  const auto line = [](std::size_t i, std::size_t j) {
    return Rational(static_cast<long>(i > j ? i - j : j - i));
  };
  EXPECT_EQ(solver.solve(std::span<const Rational>(a), std::span<const Rational>(b), line),
            Rational(1, 2));
  EXPECT_EQ(solver.basis().size(), 4u);
  const std::vector<Rational> one{1};
  EXPECT_EQ(solver.solve(std::span<const Rational>(one), std::span<const Rational>(b), line), 1);
  EXPECT_EQ(solver.basis().size(), 3u);
}

}  // namespace
}  // namespace bratteli
