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

#include "bratteli/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "bratteli/errors.hpp"

namespace bratteli {

std::string to_string(VertexRef v) {
  return std::to_string(v.level) + ":" + std::to_string(v.index);
}

void Level::add_vertex(std::string_view label,
                       std::span<const std::uint32_t> predecessors) {
  preds_.insert(preds_.end(), predecessors.begin(), predecessors.end());
  pred_offsets_.push_back(static_cast<std::uint32_t>(preds_.size()));
  labels_.append(label);
  label_offsets_.push_back(static_cast<std::uint32_t>(labels_.size()));
}

std::string_view Level::label(std::size_t i) const {
  return std::string_view(labels_).substr(label_offsets_[i],
                                          label_offsets_[i + 1] - label_offsets_[i]);
}

std::span<const std::uint32_t> Level::predecessors(std::size_t i) const {
  return std::span<const std::uint32_t>(preds_).subspan(
      pred_offsets_[i], pred_offsets_[i + 1] - pred_offsets_[i]);
}

GradedGraph::GradedGraph(std::string name, std::vector<Level> levels)
    : name_(std::move(name)), levels_(std::move(levels)) {
  validate();
}

namespace {

std::string describe(const GradedGraph& g, std::size_t level, std::size_t index) {
  return "level " + std::to_string(level) + " vertex " + std::to_string(index) +
         " '" + std::string(g.level(level).label(index)) + "'";
}

}  // namespace

void GradedGraph::validate() const {
  if (levels_.empty() || levels_[0].size() != 1) {
    throw ValidationError("level 0 must contain exactly one vertex");
  }
  if (!levels_[0].predecessors(0).empty()) {
    throw ValidationError("the root vertex cannot have predecessors");
  }
  if (levels_.size() < 2) {
    throw ValidationError("graph must have at least one level above the root");
  }
  std::vector<char> has_successor;
  for (std::size_t n = 1; n < levels_.size(); ++n) {
    const Level& lv = levels_[n];
    const std::size_t below = levels_[n - 1].size();
    if (lv.size() == 0) {
      throw ValidationError("level " + std::to_string(n) + " is empty");
    }
    has_successor.assign(below, 0);
    std::vector<std::uint32_t> sorted;
    for (std::size_t i = 0; i < lv.size(); ++i) {
      const auto preds = lv.predecessors(i);
      if (preds.empty()) {
        throw ValidationError(describe(*this, n, i) + " has no predecessor");
      }
      sorted.assign(preds.begin(), preds.end());
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError(describe(*this, n, i) + " has a duplicate edge");
      }
      for (std::uint32_t p : sorted) {
        if (p >= below) {
          throw ValidationError(describe(*this, n, i) + " lists predecessor " +
                                std::to_string(p) + " outside level " +
                                std::to_string(n - 1));
        }
        has_successor[p] = 1;
      }
    }
    for (std::size_t j = 0; j < below; ++j) {
      if (!has_successor[j]) {
        throw ValidationError(describe(*this, n - 1, j) + " has no successor");
      }
    }
  }
}

std::size_t GradedGraph::level_size(std::size_t n) const { return level(n).size(); }

std::size_t GradedGraph::vertex_count() const {
  std::size_t total = 0;
  for (const auto& lv : levels_) total += lv.size();
  return total;
}

std::size_t GradedGraph::max_level_size(std::size_t up_to) const {
  std::size_t best = 0;
  for (std::size_t n = 0; n <= std::min(up_to, depth()); ++n) {
    best = std::max(best, levels_[n].size());
  }
  return best;
}

const Level& GradedGraph::level(std::size_t n) const {
  if (n >= levels_.size()) {
    throw BoundsError("level " + std::to_string(n) + " exceeds graph depth " +
                      std::to_string(depth()));
  }
  return levels_[n];
}

void GradedGraph::check(VertexRef v) const {
  if (!contains(v)) {
    throw BoundsError("vertex " + bratteli::to_string(v) + " does not exist");
  }
}

bool GradedGraph::contains(VertexRef v) const {
  return v.level < levels_.size() && v.index < levels_[v.level].size();
}

std::string_view GradedGraph::label(VertexRef v) const {
  check(v);
  return levels_[v.level].label(v.index);
}

std::span<const std::uint32_t> GradedGraph::predecessors(VertexRef v) const {
  check(v);
  return levels_[v.level].predecessors(v.index);
}

bool GradedGraph::is_predecessor(VertexRef w, VertexRef v) const {
  if (!contains(w) || !contains(v) || w.level + 1 != v.level) return false;
  const auto preds = levels_[v.level].predecessors(v.index);
  return std::find(preds.begin(), preds.end(), w.index) != preds.end();
}

std::optional<VertexRef> GradedGraph::find(std::size_t level,
                                           std::string_view label) const {
  const Level& lv = this->level(level);
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (lv.label(i) == label) {
      return VertexRef{static_cast<std::uint32_t>(level), static_cast<std::uint32_t>(i)};
    }
  }
  return std::nullopt;
}

std::string format_tuple_label(std::span<const int> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ')';
  return out;
}

std::optional<std::vector<int>> parse_tuple_label(std::string_view label) {
  if (label.size() < 2 || label.front() != '(' || label.back() != ')') {
    return std::nullopt;
  }
  label = label.substr(1, label.size() - 2);
  std::vector<int> out;
  if (label.empty()) return out;
  while (true) {
    const auto comma = label.find(',');
    const auto token = label.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    label.remove_prefix(comma + 1);
  }
  return out;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

// Compositions of `total` into `parts` nonnegative parts, descending lex.
void enumerate_compositions(int total, int parts, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    enumerate_compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// Partitions of `total` with parts <= `max_part`, descending lex.
void enumerate_partitions(int total, int max_part, std::vector<int>& prefix,
                          std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_partitions(total - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::uint64_t composition_rank(std::span<const int> parts) {
  std::uint64_t rank = 0;
  std::int64_t remaining = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const std::uint64_t after = parts.size() - i - 1;
    const std::int64_t larger = remaining - parts[i];
    // Compositions sharing the prefix whose i-th part exceeds parts[i].
    if (larger > 0) rank += binomial(static_cast<std::uint64_t>(larger - 1) + after, after);
    remaining -= parts[i];
  }
  return rank;
}

GradedGraph build_pascal(int dimension, std::size_t depth) {
  if (dimension < 2 || dimension > kMaxPascalDimension) {
    throw BoundsError("Pascal dimension must lie in [2, " +
                      std::to_string(kMaxPascalDimension) + "], got " +
                      std::to_string(dimension));
  }
  if (depth < 1) throw BoundsError("graph depth must be at least 1");
  if (depth > kMaxBuiltVertices ||
      binomial(depth + dimension, dimension) > kMaxBuiltVertices) {
    throw BoundsError("Pascal graph of dimension " + std::to_string(dimension) +
                      " and depth " + std::to_string(depth) + " is too large");
  }
  std::vector<Level> levels(depth + 1);
  std::vector<std::vector<int>> comps;
  std::vector<int> prefix;
  std::vector<std::uint32_t> preds;
  for (std::size_t n = 0; n <= depth; ++n) {
    comps.clear();
    enumerate_compositions(static_cast<int>(n), dimension, prefix, comps);
    for (auto& c : comps) {
      preds.clear();
      if (n > 0) {
        for (int i = 0; i < dimension; ++i) {
          if (c[i] == 0) continue;
          --c[i];
          preds.push_back(static_cast<std::uint32_t>(composition_rank(c)));
          ++c[i];
        }
        std::sort(preds.begin(), preds.end());
      }
      levels[n].add_vertex(format_tuple_label(c), preds);
    }
  }
  return GradedGraph("pascal:" + std::to_string(dimension), std::move(levels));
}

GradedGraph build_young(std::size_t depth) {
  if (depth < 1 || depth > kMaxYoungDepth) {
    throw BoundsError("Young graph depth must lie in [1, " +
                      std::to_string(kMaxYoungDepth) + "], got " + std::to_string(depth));
  }
  std::vector<Level> levels(depth + 1);
  std::map<std::vector<int>, std::uint32_t> previous;
  std::map<std::vector<int>, std::uint32_t> current;
  std::vector<std::vector<int>> parts;
  std::vector<int> prefix;
  std::vector<std::uint32_t> preds;
  for (std::size_t n = 0; n <= depth; ++n) {
    parts.clear();
    enumerate_partitions(static_cast<int>(n), static_cast<int>(n), prefix, parts);
    current.clear();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto& p = parts[i];
      preds.clear();
      for (std::size_t row = 0; row < p.size(); ++row) {
        // A corner box sits at the end of a row strictly longer than the next.
        if (row + 1 < p.size() && p[row] == p[row + 1]) continue;
        std::vector<int> smaller = p;
        if (--smaller[row] == 0) smaller.pop_back();
        preds.push_back(previous.at(smaller));
      }
      std::sort(preds.begin(), preds.end());
      levels[n].add_vertex(format_tuple_label(p), preds);
      current.emplace(p, static_cast<std::uint32_t>(i));
    }
    std::swap(previous, current);
  }
  return GradedGraph("young", std::move(levels));
}

}  // namespace bratteli
