#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ett/euler.hpp"
#include "ett/graph.hpp"
#include "ett/primitives.hpp"

namespace ett {

// Schieber-Vishkin style index: O(n) build, O(1) queries.
// inlabel(v) is the integer with the most trailing zero bits inside v's
// preorder interval; equal inlabels form top-down paths, and head maps an
// inlabel value to the topmost node of its path.
struct InlabelIndex {
  i64 n = 0;
  std::vector<i64> inlabel;
  std::vector<u64> ascendant;
  std::vector<i64> head;  // indexed by inlabel value, kNone if unused
  std::vector<i64> level;
  std::vector<i64> parent;
};

InlabelIndex inlabel_build(const RootedTree& tree);
i64 inlabel_lca(const InlabelIndex& idx, i64 x, i64 y);

// Walk-up engine: O(1) per-query memory, time proportional to the
// x-y distance.
struct NaiveIndex {
  std::vector<i64> parent;
  std::vector<i64> level;
};

NaiveIndex naive_build(const RootedTree& tree);
i64 naive_lca(const NaiveIndex& idx, i64 x, i64 y);

// RMQ-over-Euler-tour engine; doubles as the CPU reference in the harness.
struct RmqLcaIndex {
  std::vector<i64> tour_nodes;  // node at each tour step, root prepended
  std::vector<i64> first_pos;   // first occurrence of each node
  RangeIndex rmq;               // over (depth << 32 | position) keys
};

RmqLcaIndex rmq_lca_build(const RootedTree& tree);
i64 rmq_lca(const RmqLcaIndex& idx, i64 x, i64 y);

// Answers queries in order, one parallel pass per batch of batch_size.
template <class Lca>
std::vector<i64> answer_batch(Lca&& lca,
                              std::span<const std::pair<i64, i64>> queries,
                              i64 batch_size) {
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
  const i64 q = static_cast<i64>(queries.size());
  std::vector<i64> answers(q);
  for (i64 begin = 0; begin < q; begin += batch_size) {
    i64 count = std::min(batch_size, q - begin);
    parallel_for(count, [&](i64 i) {
      answers[begin + i] = lca(queries[begin + i].first,
                               queries[begin + i].second);
    });
  }
  return answers;
}

}  // namespace ett
