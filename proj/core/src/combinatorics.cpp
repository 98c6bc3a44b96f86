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

#include "bratteli/combinatorics.hpp"

#include <algorithm>

#include "bratteli/errors.hpp"

namespace bratteli {

PathCounter::PathCounter(const GradedGraph& graph) : graph_(&graph) {
  dims_.push_back({BigInt(1)});
}

const std::vector<BigInt>& PathCounter::dimensions(std::size_t level) {
  if (level > graph_->depth()) {
    throw BoundsError("level " + std::to_string(level) + " exceeds graph depth " +
                      std::to_string(graph_->depth()));
  }
  while (dims_.size() <= level) {
    const std::size_t n = dims_.size();
    const Level& lv = graph_->level(n);
    const auto& below = dims_.back();
    std::vector<BigInt> next(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) {
      for (std::uint32_t p : lv.predecessors(i)) next[i] += below[p];
    }
    dims_.push_back(std::move(next));
  }
  return dims_[level];
}

const BigInt& PathCounter::dimension(VertexRef v) {
  graph_->check(v);
  return dimensions(v.level)[v.index];
}

DiscreteMeasure<Rational> PathCounter::predecessor_distribution(VertexRef v) {
  graph_->check(v);
  if (v.level == 0) {
    throw BoundsError("the root has no predecessor distribution");
  }
  const auto& below = dimensions(v.level - 1);
  const BigInt& total = dimension(v);
  std::vector<std::uint32_t> preds(graph_->predecessors(v).begin(),
                                   graph_->predecessors(v).end());
  std::sort(preds.begin(), preds.end());
  DiscreteMeasure<Rational> out;
  out.level = v.level - 1;
  out.support = preds;
  out.weights.reserve(preds.size());
  for (std::uint32_t p : preds) {
    Rational w(below[p], total);
    w.canonicalize();
    out.weights.push_back(std::move(w));
  }
  return out;
}

BigInt PathCounter::skew_dimension(VertexRef u, VertexRef v) const {
  graph_->check(u);
  graph_->check(v);
  if (u.level > v.level) {
    throw BoundsError("skew dimension needs level(u) <= level(v), got " +
                      bratteli::to_string(u) + " and " + bratteli::to_string(v));
  }
  return forward_counts(*graph_, u, v.level)[v.index];
}

std::vector<BigInt> forward_counts(const GradedGraph& graph, VertexRef from,
                                   std::size_t to_level) {
  graph.check(from);
  if (to_level < from.level || to_level > graph.depth()) {
    throw BoundsError("forward count target level " + std::to_string(to_level) +
                      " out of range");
  }
  std::vector<BigInt> current(graph.level_size(from.level));
  current[from.index] = 1;
  std::vector<BigInt> next;
  for (std::size_t n = from.level + 1; n <= to_level; ++n) {
    const Level& lv = graph.level(n);
    next.assign(lv.size(), BigInt(0));
    for (std::size_t i = 0; i < lv.size(); ++i) {
      for (std::uint32_t p : lv.predecessors(i)) {
        if (sgn(current[p]) != 0) next[i] += current[p];
      }
    }
    std::swap(current, next);
  }
  return current;
}

std::vector<BigInt> step_down(const GradedGraph& graph, std::size_t upper_level,
                              const std::vector<BigInt>& upper) {
  const Level& lv = graph.level(upper_level);
  std::vector<BigInt> lower(graph.level_size(upper_level - 1));
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (sgn(upper[i]) == 0) continue;
    for (std::uint32_t p : lv.predecessors(i)) lower[p] += upper[i];
  }
  return lower;
}

std::vector<BigInt> backward_counts(const GradedGraph& graph, VertexRef anchor,
                                    std::size_t to_level) {
  graph.check(anchor);
  if (to_level > anchor.level) {
    throw BoundsError("backward count level " + std::to_string(to_level) +
                      " lies above the anchor");
  }
  std::vector<BigInt> current(graph.level_size(anchor.level));
  current[anchor.index] = 1;
  for (std::size_t n = anchor.level; n > to_level; --n) {
    current = step_down(graph, n, current);
  }
  return current;
}

}  // namespace bratteli
