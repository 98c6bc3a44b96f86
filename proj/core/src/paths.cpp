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

#include "bratteli/paths.hpp"

#include <charconv>
#include <vector>

#include "bratteli/errors.hpp"

namespace bratteli {

bool is_pascal2(const GradedGraph& graph) {
  if (graph.level_size(1) != 2) return false;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto coords = parse_tuple_label(graph.level(1).label(i));
    if (!coords || coords->size() != 2) return false;
  }
  return graph.find(1, "(1,0)").has_value() && graph.find(1, "(0,1)").has_value();
}

namespace {

void require_pascal2(const GradedGraph& graph, std::size_t depth) {
  if (!is_pascal2(graph)) {
    throw ValidationError("path generators need the two-dimensional Pascal graph, got '" +
                          graph.name() + "'");
  }
  if (depth > graph.depth()) {
    throw BoundsError("path depth " + std::to_string(depth) + " exceeds graph depth " +
                      std::to_string(graph.depth()));
  }
}

std::uint32_t locate(const GradedGraph& graph, std::size_t level, std::int64_t ups) {
  const int coords[] = {static_cast<int>(ups), static_cast<int>(level - ups)};
  const std::string label = format_tuple_label(coords);
  // build_pascal puts (a, n - a) at index n - a.
  const auto guess = static_cast<std::uint32_t>(level - ups);
  if (guess < graph.level_size(level) && graph.level(level).label(guess) == label) {
    return guess;
  }
  const auto found = graph.find(level, label);
  if (!found) {
    throw ValidationError("vertex " + label + " missing from level " + std::to_string(level));
  }
  return found->index;
}

FinitePath from_up_counts(const GradedGraph& graph, const std::vector<std::int64_t>& ups) {
  std::vector<std::uint32_t> indices;
  indices.reserve(ups.size());
  for (std::size_t n = 0; n < ups.size(); ++n) indices.push_back(locate(graph, n, ups[n]));
  return FinitePath(graph, std::move(indices));
}

std::int64_t floor_times(const Rational& p, std::size_t n) {
  BigInt q;
  const BigInt scaled = p.get_num() * static_cast<unsigned long>(n);
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), p.get_den().get_mpz_t());
  return q.get_si();
}

void require_probability(const Rational& p) {
  if (sgn(p) < 0 || p > 1) {
    throw ValidationError("frequency " + format_rational(p) + " must lie in [0, 1]");
  }
}

}  // namespace

FinitePath frequency_path(const GradedGraph& graph, const Rational& p, std::size_t depth) {
  require_pascal2(graph, depth);
  require_probability(p);
  std::vector<std::int64_t> ups(depth + 1);
  for (std::size_t n = 0; n <= depth; ++n) ups[n] = floor_times(p, n);
  return from_up_counts(graph, ups);
}

FinitePath oscillating_path(const GradedGraph& graph, const Rational& first,
                            const Rational& second, std::size_t block, std::size_t depth) {
  require_pascal2(graph, depth);
  require_probability(first);
  require_probability(second);
  if (block < 1) throw BoundsError("oscillation block length must be positive");
  std::vector<std::int64_t> ups(depth + 1, 0);
  std::size_t block_start = 0;
  std::size_t block_length = block;
  bool use_first = true;
  for (std::size_t n = 1; n <= depth; ++n) {
    if (n - block_start > block_length) {
      block_start += block_length;
      block_length *= 2;
      use_first = !use_first;
    }
    const Rational& f = use_first ? first : second;
    const std::size_t t = n - block_start;
    ups[n] = ups[n - 1] + (floor_times(f, t) - floor_times(f, t - 1));
  }
  return from_up_counts(graph, ups);
}

FinitePath parse_path_text(const GradedGraph& graph, std::string_view text) {
  std::vector<std::uint32_t> indices;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      ++pos;
      continue;
    }
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw ValidationError("path text has a malformed index near offset " +
                            std::to_string(pos));
    }
    indices.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return FinitePath(graph, std::move(indices));
}

}  // namespace bratteli
