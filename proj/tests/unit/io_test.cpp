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

#include <filesystem>

#include "bratteli/combinatorics.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/intrinsic.hpp"
#include "bratteli/io.hpp"
#include "bratteli/measures.hpp"
#include "bratteli/transport.hpp"
#include "json.hpp"

namespace bratteli {
namespace {

using nlohmann::json;

TEST(CsvField, QuotesPerRfc4180) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("(2,1)"), "\"(2,1)\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(LevelMetricCsv, HeadersAreLabelsAndValuesAreExact) {
  const auto g = build_pascal(2, 2);
  PathCounter counter(g);
  IntrinsicMetric<Rational> metric(g, counter);
  EXPECT_EQ(level_metric_csv(g, metric.level_metric(2)),
            "vertex,\"(2,0)\",\"(1,1)\",\"(0,2)\"\r\n"
            "\"(2,0)\",0/1,1/2,1/1\r\n"
            "\"(1,1)\",1/2,0/1,1/2\r\n"
            "\"(0,2)\",1/1,1/2,0/1\r\n");
}

TEST(LevelMetricJson, CarriesModeAndLabels) {
  const auto g = build_pascal(2, 2);
  PathCounter counter(g);
  IntrinsicMetric<double> metric(g, counter);
  const auto doc = json::parse(level_metric_json(g, metric.level_metric(2)));
  EXPECT_EQ(doc["mode"], "float");
  EXPECT_EQ(doc["level"], 2);
  EXPECT_EQ(doc["labels"][1], "(1,1)");
  EXPECT_EQ(doc["distances"][0][1], 0.5);
}

TEST(DiameterProfileCsv, OneRowPerLevel) {
  const std::vector<Rational> d{1, 1, Rational(1, 2)};
  EXPECT_EQ(diameter_profile_csv<Rational>(d), "level,diameter\r\n1,1/1\r\n2,1/1\r\n3,1/2\r\n");
}

TEST(TransportJson, ValueModeAndPlan) {
  CostMatrix<Rational> cost(2);
  cost.set(0, 1, 1);
  const DiscreteMeasure<Rational> mu{0, {0, 1}, {Rational(2, 3), Rational(1, 3)}};
  const DiscreteMeasure<Rational> nu{0, {0, 1}, {Rational(1, 3), Rational(2, 3)}};
  const auto doc = json::parse(transport_json(kantorovich(cost, mu, nu)));
  EXPECT_EQ(doc["value"], "1/3");
  EXPECT_EQ(doc["mode"], "exact");
  EXPECT_EQ(doc["plan"], json::parse(R"json([[0, 0, "1/3"], [0, 1, "1/3"], [1, 1, "1/3"]])json"));
}

TEST(MarginalJson, EntriesWithExactProbabilities) {
  const auto g = build_pascal(2, 4);
  PathCounter counter(g);
  const VertexRef anchor{4, 2};
  const auto doc = json::parse(marginal_json(g, anchor, level_marginal(g, counter, anchor, 2)));
  EXPECT_EQ(doc["anchor"]["label"], "(2,2)");
  EXPECT_EQ(doc["level"], 2);
  ASSERT_EQ(doc["entries"].size(), 3u);
  EXPECT_EQ(doc["entries"][1]["label"], "(1,1)");
  EXPECT_EQ(doc["entries"][1]["p"], "2/3");
}

TEST(CylinderTableJson, PathsAsLabelLists) {
  const auto g = build_pascal(2, 4);
  const VertexRef anchor{4, 2};
  const auto paths = enumerate_paths(g, 1);
  std::vector<Rational> probs;
  for (const auto& p : paths) probs.push_back(cylinder_probability(g, anchor, p));
  const auto doc = json::parse(cylinder_table_json(g, anchor, paths, probs));
  EXPECT_EQ(doc["entries"][0]["path"], json::parse(R"json(["(0,0)", "(1,0)"])json"));
  EXPECT_EQ(doc["entries"][0]["p"], "1/2");
  EXPECT_THROW(cylinder_table_json(g, anchor, paths, std::span<const Rational>()), ValidationError);
}

TEST(TextFiles, WriteCreatesDirectories) {
  const auto dir = std::filesystem::temp_directory_path() / "bratteli_io_test";
  std::filesystem::remove_all(dir);
  write_text_file(dir / "a" / "b.txt", "hello\n");
  EXPECT_EQ(read_text_file(dir / "a" / "b.txt"), "hello\n");
  EXPECT_THROW(read_text_file(dir / "missing.txt"), ValidationError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace bratteli
