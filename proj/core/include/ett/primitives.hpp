#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "ett/graph.hpp"
#include "ett/parallel.hpp"

namespace ett {

inline constexpr i64 kTail = -1;
inline constexpr i64 kPlusInf = std::numeric_limits<i64>::max();
inline constexpr i64 kMinusInf = std::numeric_limits<i64>::min();

// Singly linked list stored as a successor array; following succ from head
// visits every index exactly once and ends at the unique kTail entry.
struct LinkedListArray {
  std::vector<i64> succ;
  i64 head = 0;

  i64 size() const { return static_cast<i64>(succ.size()); }
};

// out[0] = identity, out[i] = combine(out[i-1], values[i-1]).
// Chunk boundaries are fixed, so the result is identical for any worker
// count even without exact associativity.
template <class Combine>
std::vector<i64> exclusive_scan(std::span<const i64> values, Combine combine,
                                i64 identity) {
  const i64 n = static_cast<i64>(values.size());
  std::vector<i64> out(n);
  constexpr i64 kChunk = 1 << 14;
  if (n <= kChunk) {
    i64 acc = identity;
    for (i64 i = 0; i < n; ++i) {
      out[i] = acc;
      acc = combine(acc, values[i]);
    }
    return out;
  }
  const i64 chunks = (n + kChunk - 1) / kChunk;
  std::vector<i64> totals(chunks);
  parallel_for(chunks, [&](i64 c) {
    i64 lo = c * kChunk, hi = std::min(n, lo + kChunk);
    i64 acc = identity;
    for (i64 i = lo; i < hi; ++i) acc = combine(acc, values[i]);
    totals[c] = acc;
  });
  std::vector<i64> offsets(chunks);
  i64 acc = identity;
  for (i64 c = 0; c < chunks; ++c) {
    offsets[c] = acc;
    acc = combine(acc, totals[c]);
  }
  parallel_for(chunks, [&](i64 c) {
    i64 lo = c * kChunk, hi = std::min(n, lo + kChunk);
    i64 a = offsets[c];
    for (i64 i = lo; i < hi; ++i) {
      out[i] = a;
      a = combine(a, values[i]);
    }
  });
  return out;
}

// rank[i] = number of links from head to i. Throws std::invalid_argument on
// cycles or unreachable elements.
std::vector<i64> list_rank(const LinkedListArray& list);
std::vector<i64> list_rank_sequential(const LinkedListArray& list);

// out[i] = sum of values over all elements strictly before i in list order.
std::vector<i64> list_scan(const LinkedListArray& list,
                           std::span<const i64> values);
std::vector<i64> list_scan_sequential(const LinkedListArray& list,
                                      std::span<const i64> values);

// out[s] = fold of values[offsets[s] .. offsets[s+1]); empty segment yields
// the identity.
template <class Combine>
std::vector<i64> segmented_reduce(std::span<const i64> values,
                                  std::span<const i64> offsets,
                                  Combine combine, i64 identity) {
  if (offsets.empty() ||
      offsets.back() != static_cast<i64>(values.size())) {
    throw std::invalid_argument("segmented_reduce: bad offsets");
  }
  const i64 segments = static_cast<i64>(offsets.size()) - 1;
  std::vector<i64> out(segments);
  parallel_for(segments, [&](i64 s) {
    i64 acc = identity;
    for (i64 i = offsets[s]; i < offsets[s + 1]; ++i)
      acc = combine(acc, values[i]);
    out[s] = acc;
  });
  return out;
}

// Bottom-up binary segment tree over integer keys, power-of-two padded;
// answers inclusive range min/max queries. Read-only after build.
class RangeIndex {
 public:
  explicit RangeIndex(std::span<const i64> keys);

  i64 size() const { return size_; }
  i64 min(i64 l, i64 r) const;
  i64 max(i64 l, i64 r) const;

 private:
  i64 size_ = 0;
  i64 leaves_ = 1;
  std::vector<i64> min_tree_;
  std::vector<i64> max_tree_;
};

inline RangeIndex rmq_build(std::span<const i64> keys) {
  return RangeIndex(keys);
}
inline i64 rmq_min(const RangeIndex& idx, i64 l, i64 r) { return idx.min(l, r); }
inline i64 rmq_max(const RangeIndex& idx, i64 l, i64 r) { return idx.max(l, r); }

// level[v] = edge distance from the root, by ancestor-link doubling with
// five local jumps between synchronization rounds.
std::vector<i64> ancestor_doubling_levels(const RootedTree& tree);

}  // namespace ett
