#include "ett/lca.hpp"

#include <bit>
#include <stdexcept>

namespace ett {

namespace {

int highest_bit(u64 x) { return 63 - std::countl_zero(x); }

NodeStats stats_for_tree(const RootedTree& tree) {
  validate_tree(tree);
  return node_stats(
      linearize(build_half_edges(tree_edges(tree), true), tree.root));
}

}  // namespace

InlabelIndex inlabel_build(const RootedTree& tree) {
  if (tree.n >= (i64(1) << 62)) {
    throw std::invalid_argument("tree too large for 64-bit inlabel masks");
  }
  NodeStats stats = stats_for_tree(tree);
  const i64 n = tree.n;
  InlabelIndex idx;
  idx.n = n;
  idx.level = std::move(stats.level);
  idx.parent = std::move(stats.parent);
  idx.inlabel.resize(n);

  // inlabel(v): the integer with the maximum number of trailing zeros in
  // [l, r] = v's preorder interval; r with its low k bits cleared, where k
  // indexes the highest bit of (l-1) XOR r.
  parallel_for(n, [&](i64 v) {
    i64 l = stats.preorder[v];
    i64 r = l + stats.size[v] - 1;
    if (l == r) {
      idx.inlabel[v] = l;
    } else {
      int k = highest_bit(static_cast<u64>((l - 1) ^ r));
      idx.inlabel[v] = r & ~((i64(1) << k) - 1);
    }
  });

  // The head of an inlabel path is the unique node whose parent carries a
  // different inlabel.
  idx.head.assign(n + 1, kNone);
  parallel_for(n, [&](i64 v) {
    if (idx.parent[v] == kNone || idx.inlabel[idx.parent[v]] != idx.inlabel[v]) {
      idx.head[idx.inlabel[v]] = v;
    }
  });

  // ascendant is constant along each inlabel path:
  //   asc(path) = asc(path of parent(head)) | 2^tz(inlabel).
  // Each hop strictly increases the trailing-zero height, so at most
  // floor(log2 n) + 1 rounds resolve every path.
  std::vector<u64> path_asc(n + 1, 0);
  std::vector<char> resolved(n + 1, 0);
  const int max_rounds = highest_bit(static_cast<u64>(n)) + 2;
  for (int round = 0; round < max_rounds; ++round) {
    parallel_for(n + 1, [&](i64 label) {
      i64 h = idx.head[label];
      if (h == kNone || resolved[label]) return;
      u64 bit = u64(1) << std::countr_zero(static_cast<u64>(label));
      if (idx.parent[h] == kNone) {
        path_asc[label] = bit;
        resolved[label] = 1;
      } else {
        i64 up = idx.inlabel[idx.parent[h]];
        if (resolved[up]) {
          path_asc[label] = path_asc[up] | bit;
          resolved[label] = 1;
        }
      }
    });
  }
  idx.ascendant.resize(n);
  parallel_for(n, [&](i64 v) { idx.ascendant[v] = path_asc[idx.inlabel[v]]; });
  return idx;
}

i64 inlabel_lca(const InlabelIndex& idx, i64 x, i64 y) {
  i64 ix = idx.inlabel[x];
  i64 iy = idx.inlabel[y];
  if (ix == iy) return idx.level[x] <= idx.level[y] ? x : y;

  int i = highest_bit(static_cast<u64>(ix ^ iy));
  u64 common = idx.ascendant[x] & idx.ascendant[y];
  common &= ~((u64(1) << i) - 1);
  int j = std::countr_zero(common);
  i64 target =
      static_cast<i64>((static_cast<u64>(ix) & ~((u64(2) << j) - 1)) |
                       (u64(1) << j));

  auto lift = [&](i64 v) {
    if (idx.inlabel[v] == target) return v;
    u64 below = idx.ascendant[v] & ((u64(1) << j) - 1);
    int k = highest_bit(below);
    i64 wlabel = static_cast<i64>(
        (static_cast<u64>(idx.inlabel[v]) & ~((u64(2) << k) - 1)) |
        (u64(1) << k));
    return idx.parent[idx.head[wlabel]];
  };
  i64 xh = lift(x);
  i64 yh = lift(y);
  return idx.level[xh] <= idx.level[yh] ? xh : yh;
}

NaiveIndex naive_build(const RootedTree& tree) {
  NaiveIndex idx;
  idx.level = ancestor_doubling_levels(tree);
  idx.parent = tree.parent;
  return idx;
}

i64 naive_lca(const NaiveIndex& idx, i64 x, i64 y) {
  while (idx.level[x] > idx.level[y]) x = idx.parent[x];
  while (idx.level[y] > idx.level[x]) y = idx.parent[y];
  while (x != y) {
    x = idx.parent[x];
    y = idx.parent[y];
  }
  return x;
}

RmqLcaIndex rmq_lca_build(const RootedTree& tree) {
  validate_tree(tree);
  EulerTour tour =
      linearize(build_half_edges(tree_edges(tree), true), tree.root);
  NodeStats stats = node_stats(tour);
  const i64 steps = tour.structure.half_edge_count() + 1;

  std::vector<i64> tour_nodes(steps), keys(steps);
  tour_nodes[0] = tree.root;
  keys[0] = 0;  // root at depth 0, position 0
  parallel_for(steps - 1, [&](i64 t) {
    i64 v = tour.structure.dst[tour.order[t]];
    tour_nodes[t + 1] = v;
    keys[t + 1] = (stats.level[v] << 32) | (t + 1);
  });
  std::vector<i64> first_pos(tree.n, kPlusInf);
  for (i64 t = 0; t < steps; ++t) {
    if (first_pos[tour_nodes[t]] == kPlusInf) first_pos[tour_nodes[t]] = t;
  }
  return RmqLcaIndex{std::move(tour_nodes), std::move(first_pos),
                     RangeIndex(keys)};
}

i64 rmq_lca(const RmqLcaIndex& idx, i64 x, i64 y) {
  i64 l = idx.first_pos[x];
  i64 r = idx.first_pos[y];
  if (l > r) std::swap(l, r);
  i64 key = idx.rmq.min(l, r);
  return idx.tour_nodes[key & 0xffffffff];
}

}  // namespace ett
