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

// bratteli: intrinsic metrics and central measures on graded graphs.
//
//   bratteli metric       --graph pascal:2 --depth 10 --mode exact --out DIR
//   bratteli measure      --graph pascal:2 --anchor 4:2 --marginals 0..4
//   bratteli measure      --graph pascal:2 --path freq:1/3 --depth 2000
//   bratteli graph-export --graph young --depth 5
//   bratteli selftest     [--filter NAME]... [--force-fail]
//
// Exit status: 0 success, 1 invalid input, 2 computation or check failure.

#include <iostream>

#include "CLI11.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/version.hpp"
#include "commands.hpp"

namespace {

using bratteli::cli::RunConfig;

void add_graph_options(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--graph", c.graph, "pascal:d, young or file:PATH")->capture_default_str();
  cmd.add_option("--depth", c.depth, "Deepest level to build");
  cmd.add_option("--out", c.out, "Output directory");
}

void add_metric_options(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--mode", c.mode, "exact, float or auto")->capture_default_str();
  cmd.add_option("--seed-level", c.seed_level,
                 "Level carrying the discrete base metric, or auto")
      ->capture_default_str();
  cmd.add_option("--retain", c.retain_levels, "Level metrics kept in memory (0 keeps all)")
      ->capture_default_str();
  cmd.add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intrinsic metrics and central measures on Bratteli diagrams", "bratteli"};
  app.set_version_flag("--version", std::string(bratteli::kVersion));
  app.require_subcommand(1);
  RunConfig c;

  auto* metric = app.add_subcommand("metric", "Level distance matrices and diameter profile");
  add_graph_options(*metric, c);
  add_metric_options(*metric, c);
  metric->add_option("--levels", c.levels, "Level range a..b (default 1..depth)");

  auto* measure = app.add_subcommand("measure", "Central measure from an anchor or a path");
  add_graph_options(*measure, c);
  add_metric_options(*measure, c);
  measure->add_option("--anchor", c.anchor, "Anchor vertex LEVEL:INDEX or LEVEL:LABEL");
  measure->add_option("--path", c.path, "freq:p/q, oscillate:a,b[,blocklen] or file:PATH");
  measure->add_option("--marginals", c.marginals, "Marginal level range a..b");
  measure->add_option("--cylinder-depth", c.cylinder_depth, "Cylinder length (default 3)");
  measure->add_option("--window", c.window, "Regularity window")->capture_default_str();
  measure->add_option("--tolerance", c.tolerance, "Regularity tolerance")
      ->capture_default_str();
  measure->add_option("--burn-in", c.burn_in, "First window start judged (default depth/5)");
  measure->add_option("--regularity-depth", c.regularity_depth,
                      "Deepest level used by the regularity report")
      ->capture_default_str();

  auto* exporter = app.add_subcommand("graph-export", "Write a graph document");
  add_graph_options(*exporter, c);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks at reduced scale");
  selftest->add_option("--filter", c.filter, "Run only the named checks");
  selftest->add_flag("--force-fail", c.force_fail, "Append a failing check");
  selftest->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  selftest->add_option("--out", c.out, "Directory for check artifacts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (metric->parsed()) {
      c.command = "metric";
      return bratteli::cli::cmd_metric(c, std::cout, std::cerr);
    }
    if (measure->parsed()) {
      c.command = "measure";
      return bratteli::cli::cmd_measure(c, std::cout, std::cerr);
    }
    if (exporter->parsed()) {
      c.command = "graph-export";
      return bratteli::cli::cmd_graph_export(c, std::cout);
    }
    c.command = "selftest";
    return bratteli::cli::cmd_selftest(c, std::cout);
  } catch (const bratteli::ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bratteli::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
