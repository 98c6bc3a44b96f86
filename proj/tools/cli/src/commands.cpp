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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bratteli/checks/acceptance.hpp"
#include "bratteli/combinatorics.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/intrinsic.hpp"
#include "bratteli/io.hpp"
#include "bratteli/paths.hpp"

namespace bratteli::cli {

namespace fs = std::filesystem;

namespace {

std::string level_filename(const char* stem, std::size_t level, std::size_t last,
                           const char* ext) {
  const std::size_t width = std::max<std::size_t>(2, std::to_string(last).size());
  std::ostringstream name;
  name << stem << std::setw(static_cast<int>(width)) << std::setfill('0') << level << ext;
  return name.str();
}

void write_config(const fs::path& dir, const RunConfig& config) {
  write_text_file(dir / "config.json", config_json(config).dump(2) + "\n");
}

fs::path out_dir(const RunConfig& config) {
  return config.out.empty() ? fs::path("bratteli-out") : fs::path(config.out);
}

template <Scalar T>
void run_metric(const GradedGraph& graph, const LevelRange& range, MetricOptions options,
                const fs::path& dir, std::ostream& out) {
  PathCounter counter(graph);
  IntrinsicMetric<T> metric(graph, counter, options);
  std::vector<T> diameters;
  std::vector<QuotientClasses> classes;
  out << std::left << std::setw(7) << "level" << std::setw(10) << "vertices" << std::setw(24)
      << "diameter"
      << "zero classes\n";
  for (std::size_t n = range.first; n <= range.last; ++n) {
    const auto& rho = metric.level_metric(n);
    write_text_file(dir / level_filename("level_", n, range.last, ".csv"),
                    level_metric_csv(graph, rho));
    diameters.push_back(rho.diameter());
    std::string zero = "-";
    if constexpr (std::is_same_v<T, Rational>) {
      classes.push_back(metric.zero_classes(n));
      zero = std::to_string(classes.back().classes.size());
    }
    out << std::setw(7) << n << std::setw(10) << rho.size() << std::setw(24)
        << format_scalar(diameters.back()) << zero << "\n";
  }
  write_text_file(dir / "diameters.csv",
                  diameter_profile_csv<T>(diameters, range.first));
  if constexpr (std::is_same_v<T, Rational>) {
    write_text_file(dir / "zero_classes.json", zero_classes_json(graph, classes));
  }
}

std::size_t anchor_level(const std::string& anchor) {
  return parse_level_range(anchor.substr(0, anchor.find(':'))).first;
}

void write_marginals(const GradedGraph& graph, PathCounter& counter, VertexRef anchor,
                     const std::string& text, const fs::path& dir, std::ostream& out) {
  if (text.empty()) return;
  const auto range = parse_level_range(text);
  if (range.last > anchor.level) {
    throw BoundsError("marginal level " + std::to_string(range.last) + " above anchor level " +
                      std::to_string(anchor.level));
  }
  for (std::size_t n = range.first; n <= range.last; ++n) {
    const auto m = level_marginal(graph, counter, anchor, n);
    write_text_file(dir / "marginals" / level_filename("level_", n, range.last, ".json"),
                    marginal_json(graph, anchor, m));
    out << "marginal level " << n << ":";
    for (std::size_t k = 0; k < m.size(); ++k) {
      out << " " << graph.label({static_cast<std::uint32_t>(n), m.support[k]}) << "="
          << format_rational(m.weights[k]);
    }
    out << "\n";
  }
}

// Largest distance between a row of cylinder probabilities and the
// Bernoulli(p) product weights. Pascal-2 only: an up step keeps the index.
double bernoulli_deviation(const LimitEstimate& est, std::size_t row, const Rational& p) {
  double worst = 0.0;
  for (std::size_t c = 0; c < est.cylinders.size(); ++c) {
    const auto& path = est.cylinders[c];
    Rational expected = 1;
    for (std::size_t n = 1; n <= path.length(); ++n) {
      const bool up = path.at(n).index == path.at(n - 1).index;
      expected *= up ? p : Rational(1 - p);
    }
    worst = std::max(worst, std::abs(to_double(est.rows[row][c] - expected)));
  }
  return worst;
}

int measure_anchor(const RunConfig& c, const fs::path& dir, std::ostream& out) {
  const auto level = anchor_level(c.anchor);
  const auto graph = make_graph(c.graph, c.depth ? c.depth : std::optional(level));
  const auto anchor = parse_anchor(graph, c.anchor);
  PathCounter counter(graph);
  const std::size_t m = c.cylinder_depth.value_or(std::min<std::size_t>(3, anchor.level));
  if (m > anchor.level) {
    throw BoundsError("cylinder depth " + std::to_string(m) + " above anchor level " +
                      std::to_string(anchor.level));
  }
  CentralMeasureApprox approx(graph, anchor);
  const auto paths = enumerate_paths(graph, m);
  std::vector<Rational> probs;
  for (const auto& p : paths) probs.push_back(approx.cylinder_probability(p));
  write_text_file(dir / "cylinders.json", cylinder_table_json(graph, anchor, paths, probs));
  out << "anchor " << graph.label(anchor) << " on level " << anchor.level << ", dim "
      << counter.dimension(anchor).get_str() << "\n";
  out << paths.size() << " cylinders of length " << m << "\n";
  write_marginals(graph, counter, anchor, c.marginals, dir, out);
  return 0;
}

int measure_path(const RunConfig& c, const fs::path& dir, std::ostream& out) {
  if (!c.depth) throw ValidationError("--path needs --depth");
  const auto graph = make_graph(c.graph, c.depth);
  const auto path = make_path(graph, c.path, *c.depth);
  const std::size_t depth = path.length();
  if (depth < 1) throw BoundsError("path has length 0");
  const std::size_t m = c.cylinder_depth.value_or(std::min<std::size_t>(3, depth - 1));
  const auto est = estimate_limit_measure(graph, path, m);
  write_text_file(dir / "stabilization.csv", stabilization_csv(est));
  write_text_file(dir / "cylinders.json",
                  cylinder_table_json(graph, path.end(), est.cylinders, est.rows.back()));
  out << "path end " << graph.label(path.end()) << " on level " << depth << "\n";
  out << est.cylinders.size() << " cylinders of length " << m << ", last sup change "
      << format_double(est.successive_sup_diff.empty() ? 0.0 : est.successive_sup_diff.back())
      << "\n";
  if (c.path.rfind("freq:", 0) == 0 && is_pascal2(graph)) {
    const Rational p = parse_rational(c.path.substr(5));
    const std::size_t early = static_cast<std::size_t>(
        std::lower_bound(est.levels.begin(), est.levels.end(), depth / 4) - est.levels.begin());
    out << "bernoulli deviation: " << format_double(bernoulli_deviation(est, early, p))
        << " at level " << est.levels[early] << ", "
        << format_double(bernoulli_deviation(est, est.rows.size() - 1, p)) << " at level "
        << est.levels.back() << "\n";
  }

  const std::size_t reg_depth = std::min(depth, c.regularity_depth);
  if (reg_depth > c.window) {
    PathCounter counter(graph);
    RegularityOptions options;
    options.window = c.window;
    options.tolerance = parse_rational(c.tolerance);
    options.burn_in = c.burn_in;
    options.mode = parse_mode(c.mode);
    options.metric.seed_level = resolve_seed_level(graph, c.seed_level);
    options.metric.retain_levels = c.retain_levels;
    const auto report = regularity_report(graph, counter, path.prefix(reg_depth), options);
    write_text_file(dir / "regularity.json", regularity_json(report));
    out << "regularity to level " << reg_depth << " (" << to_string(report.mode)
        << "): " << (report.regular ? "regular" : "not regular") << ", gaps after burn-in "
        << report.burn_in << " in [" << format_double(report.min_gap_after_burn_in()) << ", "
        << format_double(report.max_gap_after_burn_in()) << "]\n";
  } else {
    out << "regularity skipped: depth " << reg_depth << " does not exceed window " << c.window
        << "\n";
  }
  if (!c.marginals.empty()) {
    PathCounter counter(graph);
    write_marginals(graph, counter, path.end(), c.marginals, dir, out);
  }
  return 0;
}

}  // namespace

int cmd_metric(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto graph = make_graph(c.graph, c.depth);
  const std::size_t depth = c.depth.value_or(graph.depth());
  const auto range = c.levels.empty() ? LevelRange{1, depth} : parse_level_range(c.levels);
  if (range.last > depth) {
    throw BoundsError("level " + std::to_string(range.last) + " is deeper than " +
                      std::to_string(depth));
  }
  MetricOptions options;
  options.seed_level = resolve_seed_level(graph, c.seed_level);
  options.retain_levels = c.retain_levels;
  if (graph.level_size(options.seed_level) == 1) {
    err << "warning: seed level " << options.seed_level
        << " has a single vertex, so every distance is 0 (try --seed-level auto)\n";
  }
  std::size_t widest = 0;
  for (std::size_t n = range.first; n <= range.last; ++n) {
    widest = std::max(widest, graph.level_size(n));
  }
  const auto mode = resolve_mode(parse_mode(c.mode), widest);
  const auto dir = out_dir(c);
  write_config(dir, c);
  if (mode == ArithmeticMode::kExact) {
    run_metric<Rational>(graph, range, options, dir, out);
  } else {
    run_metric<double>(graph, range, options, dir, out);
  }
  out << "mode " << to_string(mode) << ", wrote " << (range.last - range.first + 1)
      << " matrices to " << dir.string() << "\n";
  return 0;
}

int cmd_measure(const RunConfig& c, std::ostream& out, std::ostream& /*err*/) {
  if (c.anchor.empty() == c.path.empty()) {
    throw ValidationError("measure needs exactly one of --anchor and --path");
  }
  parse_mode(c.mode);
  parse_rational(c.tolerance);
  const auto dir = out_dir(c);
  write_config(dir, c);
  return c.anchor.empty() ? measure_path(c, dir, out) : measure_anchor(c, dir, out);
}

int cmd_graph_export(const RunConfig& c, std::ostream& out) {
  const auto graph = make_graph(c.graph, c.depth);
  const auto text = graph_to_json(graph);
  if (c.out.empty()) {
    out << text;
    return 0;
  }
  write_text_file(fs::path(c.out) / "graph.json", text);
  write_config(c.out, c);
  return 0;
}

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  checks::SuiteOptions options;
  options.reduced = true;
  options.seed = c.seed;
  options.log = &out;
  auto results = checks::run_suite(c.filter, options);
  if (c.force_fail) {
    checks::CheckResult forced;
    forced.name = "forced-failure";
    forced.detail = "failure requested by --force-fail";
    out << checks::format_result_line(forced) << "\n";
    results.push_back(std::move(forced));
  }
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    if (c.out.empty()) continue;
    for (const auto& a : r.artifacts) write_text_file(fs::path(c.out) / a.filename, a.contents);
  }
  if (!c.out.empty()) write_config(c.out, c);
  out << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? 0 : 2;
}

}  // namespace bratteli::cli
