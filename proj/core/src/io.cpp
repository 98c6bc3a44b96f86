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

#include "bratteli/io.hpp"

#include <fstream>
#include <sstream>

#include "bratteli/errors.hpp"
#include "json.hpp"

namespace bratteli {

using json = nlohmann::ordered_json;  // keys stay in schema order

namespace {

std::string label_text(const json& label, std::size_t level, std::size_t index) {
  if (label.is_string()) return label.get<std::string>();
  if (label.is_number_integer()) return std::to_string(label.get<long long>());
  if (label.is_array()) {
    std::vector<int> values;
    for (const auto& v : label) {
      if (!v.is_number_integer()) break;
      values.push_back(v.get<int>());
    }
    if (values.size() == label.size()) return format_tuple_label(values);
  }
  throw ValidationError("level " + std::to_string(level) + " vertex " + std::to_string(index) +
                        " has an unsupported label " + label.dump());
}

template <Scalar T>
json scalar_json(const T& value) {
  if constexpr (std::same_as<T, Rational>) {
    return format_rational(value);
  } else {
    return value;
  }
}

json vertex_json(const GradedGraph& graph, VertexRef v) {
  return json{{"level", v.level}, {"index", v.index}, {"label", std::string(graph.label(v))}};
}

}  // namespace

GradedGraph load_graph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("graph document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("levels") || !doc.contains("edges")) {
    throw ValidationError("graph document needs 'levels' and 'edges'");
  }
  const auto& levels = doc["levels"];
  const auto& edges = doc["edges"];
  if (!levels.is_array() || !edges.is_array()) {
    throw ValidationError("'levels' and 'edges' must be arrays");
  }
  if (levels.size() != edges.size()) {
    throw ValidationError("'levels' has " + std::to_string(levels.size()) +
                          " entries but 'edges' has " + std::to_string(edges.size()));
  }
  std::string name = doc.value("name", std::string("graph"));
  std::vector<Level> out(levels.size());
  std::vector<std::uint32_t> preds;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (!levels[n].is_array() || !edges[n].is_array() || levels[n].size() != edges[n].size()) {
      throw ValidationError("level " + std::to_string(n) +
                            " needs matching label and predecessor arrays");
    }
    for (std::size_t i = 0; i < levels[n].size(); ++i) {
      const std::string label = label_text(levels[n][i], n, i);
      const auto where = [&] {
        return "level " + std::to_string(n) + " vertex " + std::to_string(i) + " '" + label + "'";
      };
      const auto& list = edges[n][i];
      if (!list.is_array()) throw ValidationError(where() + ": predecessors must be an array");
      preds.clear();
      for (const auto& p : list) {
        if (p.is_number_unsigned()) {
          preds.push_back(p.get<std::uint32_t>());
        } else if (p.is_array() && p.size() == 2 && p[0].is_number_unsigned() &&
                   p[1].is_number_unsigned()) {
          const auto from_level = p[0].get<std::size_t>();
          if (from_level + 1 != n) {
            throw ValidationError(where() + " has an edge from level " +
                                  std::to_string(from_level) + " that skips a level");
          }
          preds.push_back(p[1].get<std::uint32_t>());
        } else {
          throw ValidationError(where() + " has a malformed predecessor " + p.dump());
        }
      }
      if (n == 0 && !preds.empty()) {
        throw ValidationError(where() + ": the root cannot have predecessors");
      }
      out[n].add_vertex(label, preds);
    }
  }
  return GradedGraph(std::move(name), std::move(out));
}

GradedGraph load_graph_file(const std::filesystem::path& path) {
  return load_graph(read_text_file(path));
}

std::string graph_to_json(const GradedGraph& graph) {
  json levels = json::array();
  json edges = json::array();
  for (std::size_t n = 0; n <= graph.depth(); ++n) {
    const Level& lv = graph.level(n);
    json labels = json::array();
    json preds = json::array();
    for (std::size_t i = 0; i < lv.size(); ++i) {
      labels.push_back(std::string(lv.label(i)));
      json list = json::array();
      for (auto p : lv.predecessors(i)) list.push_back(p);
      preds.push_back(std::move(list));
    }
    levels.push_back(std::move(labels));
    edges.push_back(std::move(preds));
  }
  json doc{{"name", graph.name()}, {"levels", std::move(levels)}, {"edges", std::move(edges)}};
  return doc.dump(1) + "\n";
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <Scalar T>
std::string level_metric_csv(const GradedGraph& graph, const LevelMetric<T>& metric) {
  const Level& lv = graph.level(metric.level());
  std::string out = "vertex";
  for (std::size_t j = 0; j < metric.size(); ++j) {
    out += ',';
    out += csv_field(lv.label(j));
  }
  out += "\r\n";
  for (std::size_t i = 0; i < metric.size(); ++i) {
    out += csv_field(lv.label(i));
    for (std::size_t j = 0; j < metric.size(); ++j) {
      out += ',';
      out += format_scalar(metric(i, j));
    }
    out += "\r\n";
  }
  return out;
}

template <Scalar T>
std::string level_metric_json(const GradedGraph& graph, const LevelMetric<T>& metric) {
  const Level& lv = graph.level(metric.level());
  json labels = json::array();
  json rows = json::array();
  for (std::size_t i = 0; i < metric.size(); ++i) {
    labels.push_back(std::string(lv.label(i)));
    json row = json::array();
    for (std::size_t j = 0; j < metric.size(); ++j) row.push_back(scalar_json(metric(i, j)));
    rows.push_back(std::move(row));
  }
  json doc{{"level", metric.level()},
           {"mode", std::string(to_string(metric.mode()))},
           {"labels", std::move(labels)},
           {"distances", std::move(rows)}};
  return doc.dump(1) + "\n";
}

template <Scalar T>
std::string diameter_profile_csv(std::span<const T> diameters, std::size_t first_level) {
  std::string out = "level,diameter\r\n";
  for (std::size_t k = 0; k < diameters.size(); ++k) {
    out += std::to_string(first_level + k) + "," + format_scalar(diameters[k]) + "\r\n";
  }
  return out;
}

std::string zero_classes_json(const GradedGraph& graph,
                              std::span<const QuotientClasses> classes) {
  json out = json::array();
  for (const auto& q : classes) {
    json groups = json::array();
    for (const auto& c : q.classes) {
      json members = json::array();
      for (auto i : c) members.push_back(std::string(graph.level(q.level).label(i)));
      groups.push_back(std::move(members));
    }
    out.push_back(json{{"level", q.level}, {"classes", std::move(groups)}});
  }
  return out.dump(1) + "\n";
}

template <Scalar T>
std::string transport_json(const TransportResult<T>& result) {
  json plan = json::array();
  for (const auto& e : result.plan.entries) {
    plan.push_back(json::array({e.source, e.target, scalar_json(e.mass)}));
  }
  json doc{{"value", scalar_json(result.value)},
           {"mode", std::string(to_string(kModeOf<T>))},
           {"plan", std::move(plan)}};
  return doc.dump(1) + "\n";
}

std::string marginal_json(const GradedGraph& graph, VertexRef anchor,
                          const DiscreteMeasure<Rational>& marginal) {
  json entries = json::array();
  for (std::size_t k = 0; k < marginal.size(); ++k) {
    const VertexRef v{static_cast<std::uint32_t>(marginal.level), marginal.support[k]};
    entries.push_back(json{{"vertex", v.index},
                           {"label", std::string(graph.label(v))},
                           {"p", format_rational(marginal.weights[k])}});
  }
  json doc{{"anchor", vertex_json(graph, anchor)},
           {"level", marginal.level},
           {"entries", std::move(entries)}};
  return doc.dump(1) + "\n";
}

std::string cylinder_table_json(const GradedGraph& graph, VertexRef anchor,
                                std::span<const FinitePath> paths,
                                std::span<const Rational> probabilities) {
  if (paths.size() != probabilities.size()) {
    throw ValidationError("cylinder table needs one probability per path");
  }
  json entries = json::array();
  for (std::size_t k = 0; k < paths.size(); ++k) {
    json labels = json::array();
    for (std::size_t n = 0; n <= paths[k].length(); ++n) {
      labels.push_back(std::string(graph.label(paths[k].at(n))));
    }
    entries.push_back(json{{"path", std::move(labels)}, {"p", format_rational(probabilities[k])}});
  }
  json doc{{"anchor", vertex_json(graph, anchor)},
           {"level", paths.empty() ? 0 : paths.front().length()},
           {"entries", std::move(entries)}};
  return doc.dump(1) + "\n";
}

std::string stabilization_csv(const LimitEstimate& estimate) {
  std::string out = "level,sup_diff";
  for (std::size_t c = 0; c < estimate.cylinders.size(); ++c) {
    out += ",c" + std::to_string(c);
  }
  out += "\r\n";
  for (std::size_t r = 0; r < estimate.rows.size(); ++r) {
    out += std::to_string(estimate.levels[r]) + ",";
    if (r > 0) out += format_double(estimate.successive_sup_diff[r - 1]);
    for (const auto& p : estimate.rows[r]) out += "," + format_double(to_double(p));
    out += "\r\n";
  }
  return out;
}

std::string regularity_json(const RegularityReport& report) {
  json gaps = json::array();
  for (const auto& g : report.gaps) {
    json entry{{"start", g.start}, {"from", g.from}, {"to", g.to}, {"value", g.value}};
    if (!g.exact.empty()) entry["exact"] = g.exact;
    gaps.push_back(std::move(entry));
  }
  json doc{{"depth", report.depth},
           {"window", report.window},
           {"burn_in", report.burn_in},
           {"tolerance", format_rational(report.tolerance)},
           {"mode", std::string(to_string(report.mode))},
           {"regular", report.regular},
           {"max_gap_after_burn_in", report.max_gap_after_burn_in()},
           {"min_gap_after_burn_in", report.min_gap_after_burn_in()},
           {"gaps", std::move(gaps)}};
  return doc.dump(1) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template std::string level_metric_csv(const GradedGraph&, const LevelMetric<Rational>&);
template std::string level_metric_csv(const GradedGraph&, const LevelMetric<double>&);
template std::string level_metric_json(const GradedGraph&, const LevelMetric<Rational>&);
template std::string level_metric_json(const GradedGraph&, const LevelMetric<double>&);
template std::string diameter_profile_csv(std::span<const Rational>, std::size_t);
template std::string diameter_profile_csv(std::span<const double>, std::size_t);
template std::string transport_json(const TransportResult<Rational>&);
template std::string transport_json(const TransportResult<double>&);

}  // namespace bratteli
