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

#include "bratteli/checks/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>

#include "bratteli/arith.hpp"
#include "bratteli/checks/generators.hpp"
#include "bratteli/checks/oracles.hpp"
#include "bratteli/combinatorics.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/graph.hpp"
#include "bratteli/intrinsic.hpp"
#include "bratteli/io.hpp"
#include "bratteli/measures.hpp"
#include "bratteli/paths.hpp"
#include "bratteli/transport.hpp"

namespace bratteli::checks {

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string sci(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", value);
  return buf;
}

struct Outcome {
  bool passed = false;
  std::string detail;
  std::vector<Artifact> artifacts;
};

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- 1 -----------------------------------------------------------------

Outcome pascal_isometry(const SuiteOptions& options) {
  const std::size_t top = options.reduced ? 12 : 20;
  const auto start = Clock::now();
  const GradedGraph graph = build_pascal(2, top);
  PathCounter counter(graph);
  IntrinsicMetric<Rational> metric(graph, counter);
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
  for (std::size_t n = 1; n <= top; ++n) {
    const auto& rho = metric.level_metric(n);
    for (std::size_t i = 0; i < rho.size(); ++i) {
      for (std::size_t j = i; j < rho.size(); ++j) {
        ++pairs;
        Rational expected(static_cast<long>(j - i), static_cast<long>(n));
        expected.canonicalize();
        if (rho(i, j) != expected || rho(j, i) != expected) {
          if (mismatches++ == 0) {
            first_mismatch = "; first at level " + std::to_string(n) + " (" + std::to_string(i) +
                             "," + std::to_string(j) + "): " + format_rational(rho(i, j));
          }
        }
      }
    }
  }
  const double seconds = elapsed_since(start);
  Outcome out;
  out.passed = mismatches == 0 && seconds < 60.0;
  out.detail = "levels 1.." + std::to_string(top) + ", " + std::to_string(pairs) +
               " pairs, " + std::to_string(mismatches) + " differ from |i-j|/n" + first_mismatch +
               "; " + fixed(seconds, 2) + " s of 60 s budget";
  return out;
}

// --- 2 -----------------------------------------------------------------

Outcome pascal_hexagonal(const SuiteOptions& options) {
  const std::size_t top = options.reduced ? 8 : 10;
  const GradedGraph graph = build_pascal(3, top);
  PathCounter counter(graph);
  IntrinsicMetric<Rational> metric(graph, counter);
  std::vector<Rational> residuals;
  std::string listing;
  Rational last_scale;
  for (std::size_t n = 4; n <= top; ++n) {
    const auto& rho = metric.level_metric(n);
    const Level& lv = graph.level(n);
    std::vector<std::vector<int>> coords;
    for (std::size_t i = 0; i < lv.size(); ++i) coords.push_back(*parse_tuple_label(lv.label(i)));
    std::vector<Rational> h;
    std::vector<Rational> d;
    Rational dot = 0;
    Rational norm = 0;
    for (std::size_t i = 0; i < lv.size(); ++i) {
      for (std::size_t j = i + 1; j < lv.size(); ++j) {
        h.push_back(hexagonal_distance(coords[i], coords[j], static_cast<int>(n)));
        d.push_back(rho(i, j));
        dot += d.back() * h.back();
        norm += h.back() * h.back();
      }
    }
    const Rational scale = dot / norm;
    Rational worst = 0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      const Rational fitted = scale * h[k];
      const Rational r = abs(d[k] - fitted) / fitted;
      if (r > worst) worst = r;
    }
    residuals.push_back(worst);
    last_scale = scale;
    listing += (listing.empty() ? "" : " ") + std::to_string(n) + ":" + sci(to_double(worst));
  }
  bool non_increasing = true;
  for (std::size_t k = 1; k < residuals.size(); ++k) {
    if (residuals[k] > residuals[k - 1]) non_increasing = false;
  }
  const Rational limit(1, 20);
  Outcome out;
  out.passed = non_increasing && residuals.back() <= limit;
  out.detail = "max relative residual per level {" + listing + "}, " +
               (non_increasing ? "non-increasing" : "NOT non-increasing") + ", fitted scale " +
               format_rational(last_scale) + " at n=" + std::to_string(top);
  return out;
}

// --- 3 -----------------------------------------------------------------

Outcome transport_oracles(const SuiteOptions& options) {
  const std::size_t instances = options.reduced ? 50 : 200;
  const auto start = Clock::now();
  Rng rng(options.seed ^ 0x3);
  std::size_t polytope_mismatches = 0;
  std::size_t marginal_failures = 0;
  for (std::size_t t = 0; t < instances; ++t) {
    const std::size_t points = uniform_index(rng, 1, 6);
    const auto cost = random_semimetric(rng, points, 12, 4);
    const auto mu = random_measure(rng, points, 4, 12);
    const auto nu = random_measure(rng, points, 4, 12);
    const auto result = kantorovich(cost, mu, nu);
    if (result.value != brute_force_transport(cost, mu, nu)) ++polytope_mismatches;
    std::map<std::uint32_t, Rational> rows;
    std::map<std::uint32_t, Rational> cols;
    for (const auto& e : result.plan.entries) {
      rows[e.source] += e.mass;
      cols[e.target] += e.mass;
    }
    for (std::size_t k = 0; k < mu.size(); ++k) {
      if (rows[mu.support[k]] != mu.weights[k]) ++marginal_failures;
    }
    for (std::size_t k = 0; k < nu.size(); ++k) {
      if (cols[nu.support[k]] != nu.weights[k]) ++marginal_failures;
    }
  }
  std::size_t line_mismatches = 0;
  for (std::size_t t = 0; t < instances; ++t) {
    const std::size_t points = uniform_index(rng, 1, 8);
    const auto positions = random_positions(rng, points, 6);
    CostMatrix<Rational> cost(points);
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t j = i + 1; j < points; ++j) cost.set(i, j, positions[j] - positions[i]);
    }
    const auto mu = random_measure(rng, points, 6, 12);
    const auto nu = random_measure(rng, points, 6, 12);
    if (kantorovich(cost, mu, nu).value != line_transport_oracle(positions, mu, nu)) {
      ++line_mismatches;
    }
  }
  const double seconds = elapsed_since(start);
  Outcome out;
  out.passed = polytope_mismatches == 0 && marginal_failures == 0 && line_mismatches == 0 &&
               seconds < 30.0;
  out.detail = std::to_string(instances) + " polytope instances (" +
               std::to_string(polytope_mismatches) + " mismatches, " +
               std::to_string(marginal_failures) + " marginal errors), " +
               std::to_string(instances) + " line instances (" +
               std::to_string(line_mismatches) + " mismatches); " + fixed(seconds, 2) +
               " s of 30 s budget";
  return out;
}

// --- 4 -----------------------------------------------------------------

Outcome metric_axioms(const SuiteOptions& options) {
  struct Case {
    std::string name;
    GradedGraph graph;
    std::size_t top;
  };
  std::vector<Case> cases;
  cases.push_back({"pascal:2", build_pascal(2, options.reduced ? 12 : 20), 0});
  cases.push_back({"pascal:3", build_pascal(3, options.reduced ? 6 : 8), 0});
  cases.push_back({"young", build_young(options.reduced ? 6 : 8), 0});
  const std::size_t triples = options.reduced ? 200 : 1000;
  Rng rng(options.seed ^ 0x4);
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string notes;
  bool profiles_ok = true;
  for (auto& c : cases) {
    c.top = c.graph.depth();
    PathCounter counter(c.graph);
    const std::size_t seed = first_branching_level(c.graph);
    IntrinsicMetric<Rational> metric(c.graph, counter, {seed, 0});
    for (std::size_t n = 1; n <= c.top; ++n) {
      const auto& rho = metric.level_metric(n);
      const std::size_t size = rho.size();
      for (std::size_t t = 0; t < triples; ++t) {
        const std::size_t a = uniform_index(rng, 0, size - 1);
        const std::size_t b = uniform_index(rng, 0, size - 1);
        const std::size_t x = uniform_index(rng, 0, size - 1);
        ++checked;
        const bool ok = rho(a, b) == rho(b, a) && is_zero(rho(a, a)) && sgn(rho(a, b)) >= 0 &&
                        rho(a, x) <= rho(a, b) + rho(b, x);
        if (!ok) ++violations;
      }
    }
    const auto profile = metric.diameter_profile(c.top);
    for (std::size_t n = seed; n < c.top; ++n) {
      if (profile[n] > profile[n - 1]) profiles_ok = false;
    }
    notes += (notes.empty() ? "" : ", ") + c.name + " n<=" + std::to_string(c.top) +
             " (base level " + std::to_string(seed) + ")";
  }
  Outcome out;
  out.passed = violations == 0 && profiles_ok;
  out.detail = notes + "; " + std::to_string(checked) + " triples, " +
               std::to_string(violations) + " violations; diameter profiles " +
               (profiles_ok ? "non-increasing" : "INCREASE somewhere") + " from the base level";
  return out;
}

// --- 5 -----------------------------------------------------------------

Outcome central_identities(const SuiteOptions& options) {
  const std::size_t depth = 12;
  const std::size_t anchors = options.reduced ? 10 : 50;
  const std::size_t cap = options.reduced ? 4 : 5;
  std::vector<std::pair<std::string, GradedGraph>> graphs;
  graphs.emplace_back("pascal:2", build_pascal(2, depth));
  graphs.emplace_back("pascal:3", build_pascal(3, depth));
  graphs.emplace_back("young", build_young(depth));
  Rng rng(options.seed ^ 0x5);
  std::map<std::string, std::size_t> failures;
  std::size_t identities = 0;
  for (const auto& [name, graph] : graphs) {
    PathCounter counter(graph);
    std::vector<std::vector<FinitePath>> paths;
    for (std::size_t m = 0; m <= cap; ++m) paths.push_back(enumerate_paths(graph, m));
    for (std::size_t a = 0; a < anchors; ++a) {
      const auto level = static_cast<std::uint32_t>(uniform_index(rng, 1, depth));
      const auto index =
          static_cast<std::uint32_t>(uniform_index(rng, 0, graph.level_size(level) - 1));
      const VertexRef anchor{level, index};
      CentralMeasureApprox approx(graph, anchor);
      const std::size_t longest = std::min<std::size_t>(level, cap);
      std::vector<std::map<FinitePath, Rational>> prob(longest + 1);
      for (std::size_t m = 0; m <= longest; ++m) {
        Rational total = 0;
        std::map<std::uint32_t, Rational> by_end;
        for (const auto& p : paths[m]) {
          const Rational q = approx.cylinder_probability(p);
          prob[m].emplace(p, q);
          total += q;
          const auto [it, fresh] = by_end.emplace(p.end().index, q);
          ++identities;
          if (!fresh && it->second != q) ++failures["centrality"];
        }
        ++identities;
        if (total != 1) ++failures["normalization"];
      }
      for (std::size_t m = 0; m < longest; ++m) {
        std::map<FinitePath, Rational> sums;
        for (const auto& [q, value] : prob[m + 1]) sums[q.prefix(m)] += value;
        for (const auto& [p, value] : prob[m]) {
          ++identities;
          if (sums[p] != value) ++failures["additivity"];
        }
      }
      for (std::size_t n = 0; n < level; ++n) {
        ++identities;
        const auto upper = approx.level_marginal(counter, n + 1);
        if (project_measure(counter, upper) != approx.level_marginal(counter, n)) {
          ++failures["projection"];
        }
      }
      // Path-walking cross-check of the counts behind the probabilities.
      ++identities;
      if (approx.anchor_dimension() != count_paths_by_walking(graph, GradedGraph::root(), anchor)) {
        ++failures["walk"];
      }
      const auto& codim = approx.codimensions(longest);
      for (std::uint32_t u = 0; u < codim.size(); ++u) {
        ++identities;
        const VertexRef from{static_cast<std::uint32_t>(longest), u};
        if (codim[u] != count_paths_by_walking(graph, from, anchor)) ++failures["walk"];
      }
    }
  }
  std::size_t total_failures = 0;
  std::string listing;
  for (const auto& [kind, count] : failures) {
    total_failures += count;
    listing += " " + kind + "=" + std::to_string(count);
  }
  Outcome out;
  out.passed = total_failures == 0;
  out.detail = std::to_string(anchors) + " anchors per graph on pascal:2, pascal:3, young up to level " +
               std::to_string(depth) + ", cylinders up to length " + std::to_string(cap) + "; " +
               std::to_string(identities) + " exact identities, " +
               std::to_string(total_failures) + " failures" + listing;
  return out;
}

// --- 6 -----------------------------------------------------------------

Outcome definetti(const SuiteOptions& options) {
  const std::size_t depth = options.reduced ? 1000 : 2000;
  const std::size_t early = depth / 4;
  const std::size_t m = 5;
  const auto start = Clock::now();
  const GradedGraph graph = build_pascal(2, depth);
  Outcome out;
  out.passed = true;
  for (const Rational& p : {Rational(1, 3), Rational(1, 2)}) {
    const FinitePath path = frequency_path(graph, p, depth);
    const LimitEstimate est = estimate_limit_measure(graph, path, m);
    // An up step keeps the index: (a, n - a) sits at index n - a.
    std::vector<double> bernoulli;
    for (const auto& c : est.cylinders) {
      Rational value = 1;
      for (std::size_t k = 1; k <= m; ++k) {
        value *= c.indices()[k] == c.indices()[k - 1] ? p : Rational(1 - p);
      }
      bernoulli.push_back(to_double(value));
    }
    std::string curve = "level,max_deviation\r\n";
    double fitted_c = 0.0;
    double dev_early = 0.0;
    double dev_final = 0.0;
    for (std::size_t r = 0; r < est.rows.size(); ++r) {
      double dev = 0.0;
      for (std::size_t c = 0; c < bernoulli.size(); ++c) {
        dev = std::max(dev, std::abs(to_double(est.rows[r][c]) - bernoulli[c]));
      }
      const std::size_t n = est.levels[r];
      if (n >= 4 * m * m) fitted_c = std::max(fitted_c, dev * static_cast<double>(n) / (m * m));
      if (n == early) dev_early = dev;
      if (n == depth) dev_final = dev;
      curve += std::to_string(n) + "," + format_double(dev) + "\r\n";
    }
    const bool ok = dev_final <= 0.01 && dev_final < dev_early;
    out.passed = out.passed && ok;
    const std::string tag = p.get_num().get_str() + "_" + p.get_den().get_str();
    out.artifacts.push_back({"definetti_p" + tag + ".csv", std::move(curve)});
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("p=") + format_rational(p) +
                  ": deviation " + sci(dev_early) + " at n=" + std::to_string(early) + ", " +
                  sci(dev_final) + " at n=" + std::to_string(depth) + ", fitted C=" +
                  fixed(fitted_c, 3) + " (dev <= C m^2/n for n >= " + std::to_string(4 * m * m) +
                  ")";
  }
  const double seconds = elapsed_since(start);
  out.passed = out.passed && seconds < 60.0;
  out.detail += "; " + fixed(seconds, 2) + " s of 60 s budget";
  return out;
}

// --- 7 -----------------------------------------------------------------

Outcome regularity(const SuiteOptions& options) {
  const std::size_t depth = options.reduced ? 256 : 512;
  const GradedGraph graph = build_pascal(2, depth);
  PathCounter counter(graph);
  RegularityOptions reg;
  reg.window = 20;
  reg.tolerance = Rational(1, 20);
  const FinitePath steady = frequency_path(graph, Rational(1, 3), depth);
  const FinitePath swinging = oscillating_path(graph, Rational(1, 3), Rational(2, 3),
                                               kDefaultOscillationBlock, depth);
  const RegularityReport a = regularity_report(graph, counter, steady, reg);
  const RegularityReport b = regularity_report(graph, counter, swinging, reg);
  const double threshold = 0.2;
  const bool steady_ok = a.regular;
  const bool swinging_ok = !b.regular && b.min_gap_after_burn_in() >= threshold;
  Outcome out;
  out.passed = steady_ok && swinging_ok;
  out.detail = "depth " + std::to_string(depth) + ", window 20, burn-in " +
               std::to_string(a.burn_in) + ", " + std::string(to_string(a.mode)) +
               " mode; freq:1/3 " + (a.regular ? "regular" : "NOT regular") +
               " (largest gap after burn-in " + fixed(a.max_gap_after_burn_in(), 4) +
               ", needs < 0.05); oscillate:1/3,2/3 " + (b.regular ? "regular" : "not regular") +
               " (smallest window gap after burn-in " + fixed(b.min_gap_after_burn_in(), 4) +
               ", largest " + fixed(b.max_gap_after_burn_in(), 4) + ", needs every window >= 0.2)";
  out.artifacts.push_back({"regularity_freq.json", regularity_json(a)});
  out.artifacts.push_back({"regularity_oscillate.json", regularity_json(b)});
  return out;
}

// --- 8 -----------------------------------------------------------------

Outcome young_frequency(const SuiteOptions& options) {
  const std::size_t top = options.reduced ? 8 : 10;
  const GradedGraph graph = build_young(top);
  PathCounter counter(graph);
  const std::size_t seed = first_branching_level(graph);
  IntrinsicMetric<Rational> metric(graph, counter, {seed, 0});
  const double threshold = 0.9;
  std::string scatter = "level,u,v,intrinsic,frequency_l1\r\n";
  std::vector<Rational> all_rho;
  std::vector<Rational> all_freq;
  std::string listing;
  double worst = 1.0;
  // Levels with fewer than three pairs carry no rank information.
  for (std::size_t n = seed; n <= top; ++n) {
    const auto& rho = metric.level_metric(n);
    const Level& lv = graph.level(n);
    std::vector<std::vector<Rational>> freq;
    for (std::size_t i = 0; i < lv.size(); ++i) {
      freq.push_back(row_column_frequencies(*parse_tuple_label(lv.label(i)), static_cast<int>(n)));
    }
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < lv.size(); ++i) {
      for (std::size_t j = i + 1; j < lv.size(); ++j) {
        xs.push_back(rho(i, j));
        ys.push_back(l1_distance(freq[i], freq[j]));
        scatter += std::to_string(n) + "," + csv_field(lv.label(i)) + "," +
                   csv_field(lv.label(j)) + "," + format_rational(xs.back()) + "," +
                   format_rational(ys.back()) + "\r\n";
      }
    }
    all_rho.insert(all_rho.end(), xs.begin(), xs.end());
    all_freq.insert(all_freq.end(), ys.begin(), ys.end());
    if (xs.size() < 3) continue;
    const double r = spearman(xs, ys);
    worst = std::min(worst, r);
    listing += (listing.empty() ? "" : " ") + std::to_string(n) + ":" + fixed(r, 3);
  }
  const double pooled = spearman(all_rho, all_freq);
  Outcome out;
  out.passed = worst >= threshold;
  out.detail = "Spearman per level {" + listing + "}, minimum " + fixed(worst, 3) +
               " (needs >= 0.9); pooled over levels " + fixed(pooled, 3) + "; base level " +
               std::to_string(seed) + ", exploratory";
  out.artifacts.push_back({"young_frequency_scatter.csv", std::move(scatter)});
  return out;
}

struct Entry {
  CheckInfo info;
  Outcome (*run)(const SuiteOptions&);
};

constexpr std::array<Entry, 8> kEntries{{
    {{"pascal-isometry", "Pascal-2 intrinsic metric equals |i-j|/n exactly"}, pascal_isometry},
    {{"pascal-hexagonal", "Pascal-3 metric proportional to the hexagonal norm"}, pascal_hexagonal},
    {{"transport-oracles", "simplex agrees with polytope and line oracles"}, transport_oracles},
    {{"metric-axioms", "symmetry, triangle inequality, diameter monotonicity"}, metric_axioms},
    {{"central-measure-identities", "additivity, normalization, centrality, projection"},
     central_identities},
    {{"definetti-convergence", "cylinder probabilities approach Bernoulli(p)"}, definetti},
    {{"regularity-discrimination", "frequency path regular, oscillating path not"}, regularity},
    {{"young-frequency", "intrinsic vs row/column frequency rank correlation"}, young_frequency},
}};

constexpr std::array<CheckInfo, 8> kInfos = [] {
  std::array<CheckInfo, 8> out{};
  for (std::size_t k = 0; k < kEntries.size(); ++k) out[k] = kEntries[k].info;
  return out;
}();

}  // namespace

std::span<const CheckInfo> acceptance_checks() { return kInfos; }

CheckResult run_check(std::string_view name, const SuiteOptions& options) {
  const auto it = std::find_if(kEntries.begin(), kEntries.end(),
                               [&](const Entry& e) { return e.info.name == name; });
  if (it == kEntries.end()) {
    throw ValidationError("unknown check '" + std::string(name) + "'");
  }
  CheckResult result;
  result.name = std::string(name);
  const auto start = Clock::now();
  try {
    Outcome outcome = it->run(options);
    result.passed = outcome.passed;
    result.detail = std::move(outcome.detail);
    result.artifacts = std::move(outcome.artifacts);
  } catch (const Error& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds = elapsed_since(start);
  if (options.log != nullptr) *options.log << format_result_line(result) << std::endl;
  return result;
}

std::vector<CheckResult> run_suite(std::span<const std::string> names,
                                   const SuiteOptions& options) {
  for (const auto& n : names) {
    const bool known = std::any_of(kEntries.begin(), kEntries.end(),
                                   [&](const Entry& e) { return e.info.name == n; });
    if (!known) throw ValidationError("unknown check '" + n + "'");
  }
  std::vector<CheckResult> out;
  for (const auto& e : kEntries) {
    if (!names.empty() && std::find(names.begin(), names.end(), e.info.name) == names.end()) {
      continue;
    }
    out.push_back(run_check(e.info.name, options));
  }
  return out;
}

std::string format_result_line(const CheckResult& result) {
  return std::string(result.passed ? "PASS " : "FAIL ") + result.name + " (" +
         fixed(result.seconds, 2) + " s): " + result.detail;
}

}  // namespace bratteli::checks
