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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bratteli/arith.hpp"
#include "bratteli/discrete_measure.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/intrinsic.hpp"
#include "bratteli/measures.hpp"
#include "bratteli/transport.hpp"

namespace bratteli {

// Graph document:
//   { "name": str, "levels": [[label, ...], ...],
//     "edges": [[[pred, ...] per vertex], ...] }
// edges[n][i] lists the predecessors of vertex i on level n. A predecessor
// is either an index into level n - 1 or a [level, index] pair; pairs whose
// level is not n - 1 are rejected as level-skipping edges. edges[0] must be
// [[]]. Throws ValidationError naming the offending vertex.
GradedGraph load_graph(std::string_view json_text);
GradedGraph load_graph_file(const std::filesystem::path& path);

// Inverse of load_graph (predecessors written as plain indices).
std::string graph_to_json(const GradedGraph& graph);

// RFC 4180 field quoting.
std::string csv_field(std::string_view text);

// Distance matrix with vertex labels as row and column headers.
template <Scalar T>
std::string level_metric_csv(const GradedGraph& graph, const LevelMetric<T>& metric);

template <Scalar T>
std::string level_metric_json(const GradedGraph& graph, const LevelMetric<T>& metric);

// Columns: level, diameter. Row k holds level first_level + k.
template <Scalar T>
std::string diameter_profile_csv(std::span<const T> diameters, std::size_t first_level = 1);

std::string zero_classes_json(const GradedGraph& graph,
                              std::span<const QuotientClasses> classes);

// {value, mode, plan: [[i, j, mass], ...]}
template <Scalar T>
std::string transport_json(const TransportResult<T>& result);

// {anchor, level, entries: [{vertex, label, p}]}
std::string marginal_json(const GradedGraph& graph, VertexRef anchor,
                          const DiscreteMeasure<Rational>& marginal);

// {anchor, level, entries: [{path, p}]} where level is the cylinder length.
std::string cylinder_table_json(const GradedGraph& graph, VertexRef anchor,
                                std::span<const FinitePath> paths,
                                std::span<const Rational> probabilities);

// Columns: level, sup_diff, then one float column per cylinder.
std::string stabilization_csv(const LimitEstimate& estimate);

std::string regularity_json(const RegularityReport& report);

// Writes `contents` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace bratteli
