#include "ett/euler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ett/primitives.hpp"

namespace ett {

namespace {

void check_is_tree(const EdgeList& g) {
  if (g.m() != g.n - 1) {
    throw std::invalid_argument("not a tree: m != n - 1");
  }
  std::vector<i64> uf(g.n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](i64 v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  i64 merges = 0;
  for (const auto& [u, v] : g.edges) {
    i64 ru = find(u), rv = find(v);
    if (ru != rv) {
      uf[ru] = rv;
      ++merges;
    }
  }
  if (merges != g.n - 1) {
    throw std::invalid_argument("not a tree: disconnected");
  }
}

}  // namespace

HalfEdgeStructure build_half_edges(const EdgeList& tree,
                                   bool skip_validation) {
  if (tree.n <= 0) throw std::invalid_argument("empty node set");
  if (!skip_validation) check_is_tree(tree);
  HalfEdgeStructure h;
  h.n = tree.n;
  const i64 k = 2 * tree.m();
  h.first.assign(tree.n, kNone);
  if (k == 0) return h;

  // A holds twin pairs adjacently: A[2i] = (u,v), A[2i+1] = (v,u).
  std::vector<std::pair<i64, i64>> a(k);
  parallel_for(tree.m(), [&](i64 i) {
    a[2 * i] = tree.edges[i];
    a[2 * i + 1] = {tree.edges[i].second, tree.edges[i].first};
  });

  // B is the lexicographically sorted copy; perm maps B index -> A index.
  // Keys are dense node ids, so two stable counting passes (dst, then src)
  // sort in O(n) regardless of the input order.
  std::vector<i64> perm(k), tmp(k);
  std::iota(tmp.begin(), tmp.end(), 0);
  auto counting_pass = [&](const std::vector<i64>& in, std::vector<i64>& out,
                           auto key) {
    std::vector<i64> count(tree.n + 1, 0);
    for (i64 x : in) ++count[key(x) + 1];
    for (i64 i = 0; i < tree.n; ++i) count[i + 1] += count[i];
    for (i64 x : in) out[count[key(x)]++] = x;
  };
  counting_pass(tmp, perm, [&](i64 x) { return a[x].second; });
  tmp = perm;
  counting_pass(tmp, perm, [&](i64 x) { return a[x].first; });
  std::vector<i64> inv(k);
  parallel_for(k, [&](i64 b) { inv[perm[b]] = b; });

  h.src.resize(k);
  h.dst.resize(k);
  h.twin.resize(k);
  h.next.resize(k);
  parallel_for(k, [&](i64 b) {
    h.src[b] = a[perm[b]].first;
    h.dst[b] = a[perm[b]].second;
    h.twin[b] = inv[perm[b] ^ 1];
  });
  parallel_for(k, [&](i64 b) {
    if (b == 0 || h.src[b - 1] != h.src[b]) h.first[h.src[b]] = b;
  });
  parallel_for(k, [&](i64 b) {
    h.next[b] = (b + 1 < k && h.src[b + 1] == h.src[b]) ? b + 1
                                                        : h.first[h.src[b]];
  });
  return h;
}

EulerTour linearize(HalfEdgeStructure h, i64 root) {
  if (root < 0 || root >= h.n) throw std::invalid_argument("root out of range");
  EulerTour tour;
  tour.root = root;
  const i64 k = h.half_edge_count();
  if (k == 0) {
    tour.structure = std::move(h);
    return tour;
  }

  LinkedListArray list;
  list.succ.resize(k);
  list.head = h.first[root];
  parallel_for(k, [&](i64 e) { list.succ[e] = h.next[h.twin[e]]; });
  // Cut the cycle just before first[root]: its predecessor in the tour is
  // the twin of the last half-edge in root's circular list.
  i64 last = h.first[root];
  while (h.next[last] != h.first[root]) last = h.next[last];
  list.succ[h.twin[last]] = kTail;

  tour.pos = list_rank(list);
  tour.order.resize(k);
  parallel_for(k, [&](i64 e) { tour.order[tour.pos[e]] = e; });
  tour.structure = std::move(h);
  return tour;
}

NodeStats node_stats(const EulerTour& tour) {
  const HalfEdgeStructure& h = tour.structure;
  const i64 n = h.n;
  const i64 k = h.half_edge_count();
  NodeStats stats;
  stats.preorder.assign(n, 0);
  stats.size.assign(n, 0);
  stats.level.assign(n, 0);
  stats.parent.assign(n, kNone);
  stats.preorder[tour.root] = 1;
  stats.size[tour.root] = n;
  if (k == 0) return stats;

  // A half-edge goes down iff it appears before its twin in the tour.
  std::vector<i64> down_weight(k), level_weight(k);
  parallel_for(k, [&](i64 t) {
    i64 e = tour.order[t];
    bool down = tour.pos[e] < tour.pos[h.twin[e]];
    down_weight[t] = down ? 1 : 0;
    level_weight[t] = down ? 1 : -1;
  });
  auto plus = [](i64 x, i64 y) { return x + y; };
  std::vector<i64> pre_scan = exclusive_scan(down_weight, plus, 0);
  std::vector<i64> lev_scan = exclusive_scan(level_weight, plus, 0);

  parallel_for(k, [&](i64 t) {
    i64 e = tour.order[t];
    if (down_weight[t] == 0) return;
    i64 v = h.dst[e];
    stats.preorder[v] = pre_scan[t] + 2;  // root takes preorder 1
    stats.level[v] = lev_scan[t] + 1;
    stats.parent[v] = h.src[e];
    i64 q = tour.pos[h.twin[e]];
    stats.size[v] = (q - t + 1) / 2;
  });
  return stats;
}

}  // namespace ett
