#include "ett/primitives.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "ett/rng.hpp"

namespace ett {

namespace {

constexpr u64 kSplitterSeed = 0x65746b5f6c697374ULL;
constexpr i64 kTargetSublist = 1024;

void check_valid_head(const LinkedListArray& list) {
  if (list.size() == 0) return;
  if (list.head < 0 || list.head >= list.size()) {
    throw std::invalid_argument("list head out of range");
  }
}

// Shared core of list_rank / list_scan: computes, for each element, the
// exclusive prefix of `values` in list order (values == nullptr means
// all-ones, i.e. plain ranks).
std::vector<i64> list_prefix(const LinkedListArray& list,
                             const i64* values) {
  check_valid_head(list);
  const i64 k = list.size();
  std::vector<i64> out(k, 0);
  if (k == 0) return out;

  // Splitters: the head plus ~k/1024 seeded random positions.
  std::vector<char> is_splitter(k, 0);
  is_splitter[list.head] = 1;
  const i64 extra = std::max<i64>(1, (k + kTargetSublist - 1) / kTargetSublist);
  SplitMix64 rng(kSplitterSeed);
  for (i64 i = 0; i < extra; ++i) {
    is_splitter[rng.next_below(static_cast<u64>(k))] = 1;
  }
  std::vector<i64> splitters;
  for (i64 i = 0; i < k; ++i) {
    if (is_splitter[i]) splitters.push_back(i);
  }
  const i64 s = static_cast<i64>(splitters.size());
  std::vector<i64> sublist_of(k, kNone);  // index into `splitters`
  std::vector<i64> sub_next(s, kTail);    // element id of the next splitter
  std::vector<i64> sub_sum(s, 0);         // value total of the sublist
  std::atomic<bool> structural_error{false};

  parallel_for_balanced(s, [&](i64 si) {
    i64 cur = splitters[si];
    i64 prefix = 0;
    i64 steps = 0;
    while (true) {
      out[cur] = prefix;
      sublist_of[cur] = si;
      prefix += values ? values[cur] : 1;
      if (++steps > k) {
        structural_error.store(true, std::memory_order_relaxed);
        return;
      }
      i64 next = list.succ[cur];
      if (next == kTail) {
        sub_next[si] = kTail;
        break;
      }
      if (next < 0 || next >= k) {
        structural_error.store(true, std::memory_order_relaxed);
        return;
      }
      if (is_splitter[next]) {
        sub_next[si] = next;
        break;
      }
      cur = next;
    }
    sub_sum[si] = prefix;
  });
  if (structural_error.load()) {
    throw std::invalid_argument("linked list contains a cycle");
  }

  // Stitch sublists sequentially in list order.
  std::vector<i64> sub_offset(s, 0);
  i64 cur_sub = sublist_of[list.head];
  i64 acc = 0;
  i64 stitched = 0;
  while (true) {
    if (++stitched > s) {
      throw std::invalid_argument("linked list contains a cycle");
    }
    sub_offset[cur_sub] = acc;
    acc += sub_sum[cur_sub];
    i64 next = sub_next[cur_sub];
    if (next == kTail) break;
    cur_sub = sublist_of[next];
  }
  if (stitched != s) {
    throw std::invalid_argument("linked list does not cover all elements");
  }

  std::atomic<bool> unreachable{false};
  parallel_for(k, [&](i64 i) {
    if (sublist_of[i] == kNone) {
      unreachable.store(true, std::memory_order_relaxed);
      return;
    }
    out[i] += sub_offset[sublist_of[i]];
  });
  if (unreachable.load()) {
    throw std::invalid_argument("linked list does not cover all elements");
  }
  return out;
}

std::vector<i64> list_prefix_sequential(const LinkedListArray& list,
                                        const i64* values) {
  check_valid_head(list);
  const i64 k = list.size();
  std::vector<i64> out(k, 0);
  if (k == 0) return out;
  std::vector<char> visited(k, 0);
  i64 cur = list.head;
  i64 acc = 0;
  i64 count = 0;
  while (cur != kTail) {
    if (cur < 0 || cur >= k || visited[cur]) {
      throw std::invalid_argument("linked list contains a cycle");
    }
    visited[cur] = 1;
    out[cur] = acc;
    acc += values ? values[cur] : 1;
    ++count;
    cur = list.succ[cur];
  }
  if (count != k) {
    throw std::invalid_argument("linked list does not cover all elements");
  }
  return out;
}

}  // namespace

std::vector<i64> list_rank(const LinkedListArray& list) {
  return list_prefix(list, nullptr);
}

std::vector<i64> list_rank_sequential(const LinkedListArray& list) {
  return list_prefix_sequential(list, nullptr);
}

std::vector<i64> list_scan(const LinkedListArray& list,
                           std::span<const i64> values) {
  if (static_cast<i64>(values.size()) != list.size()) {
    throw std::invalid_argument("list_scan: values size mismatch");
  }
  return list_prefix(list, values.data());
}

std::vector<i64> list_scan_sequential(const LinkedListArray& list,
                                      std::span<const i64> values) {
  if (static_cast<i64>(values.size()) != list.size()) {
    throw std::invalid_argument("list_scan: values size mismatch");
  }
  return list_prefix_sequential(list, values.data());
}

RangeIndex::RangeIndex(std::span<const i64> keys)
    : size_(static_cast<i64>(keys.size())) {
  leaves_ = static_cast<i64>(std::bit_ceil(static_cast<u64>(std::max<i64>(size_, 1))));
  min_tree_.assign(2 * leaves_, kPlusInf);
  max_tree_.assign(2 * leaves_, kMinusInf);
  parallel_for(size_, [&](i64 i) {
    min_tree_[leaves_ + i] = keys[i];
    max_tree_[leaves_ + i] = keys[i];
  });
  for (i64 i = leaves_ - 1; i >= 1; --i) {
    min_tree_[i] = std::min(min_tree_[2 * i], min_tree_[2 * i + 1]);
    max_tree_[i] = std::max(max_tree_[2 * i], max_tree_[2 * i + 1]);
  }
}

i64 RangeIndex::min(i64 l, i64 r) const {
  if (l < 0 || r >= size_ || l > r) {
    throw std::out_of_range("RangeIndex::min: bad range");
  }
  i64 res = kPlusInf;
  for (l += leaves_, r += leaves_ + 1; l < r; l >>= 1, r >>= 1) {
    if (l & 1) res = std::min(res, min_tree_[l++]);
    if (r & 1) res = std::min(res, min_tree_[--r]);
  }
  return res;
}

i64 RangeIndex::max(i64 l, i64 r) const {
  if (l < 0 || r >= size_ || l > r) {
    throw std::out_of_range("RangeIndex::max: bad range");
  }
  i64 res = kMinusInf;
  for (l += leaves_, r += leaves_ + 1; l < r; l >>= 1, r >>= 1) {
    if (l & 1) res = std::max(res, max_tree_[l++]);
    if (r & 1) res = std::max(res, max_tree_[--r]);
  }
  return res;
}

std::vector<i64> ancestor_doubling_levels(const RootedTree& tree) {
  validate_tree(tree);
  const i64 n = tree.n;
  std::vector<i64> anc(n), dist(n);
  for (i64 v = 0; v < n; ++v) {
    anc[v] = tree.parent[v] == kNone ? v : tree.parent[v];
    dist[v] = tree.parent[v] == kNone ? 0 : 1;
  }
  std::vector<i64> anc_next(n), dist_next(n);
  // Each round jumps every pointer five times through a snapshot of the
  // previous round, then synchronizes.
  while (true) {
    bool done = true;
    for (i64 v = 0; v < n; ++v) {
      if (anc[v] != tree.root) {
        done = false;
        break;
      }
    }
    if (done) break;
    parallel_for(n, [&](i64 v) {
      i64 a = anc[v], d = dist[v];
      for (int jump = 0; jump < 5 && a != tree.root; ++jump) {
        d += dist[a];
        a = anc[a];
      }
      anc_next[v] = a;
      dist_next[v] = d;
    });
    anc.swap(anc_next);
    dist.swap(dist_next);
  }
  return dist;
}

}  // namespace ett
