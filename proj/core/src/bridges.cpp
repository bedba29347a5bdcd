#include "ett/bridges.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "ett/parallel.hpp"
#include "ett/primitives.hpp"

namespace ett {

namespace {

using Clock = std::chrono::steady_clock;

i64 elapsed_ns(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              since)
      .count();
}

constexpr u64 kNoCandidate = ~u64{0};

void check_packable(const AdjacencyIndex& g) {
  if (g.n >= (i64(1) << 31) || g.m >= (i64(1) << 31)) {
    throw std::invalid_argument("graph too large for packed hooking keys");
  }
}

void atomic_min_u64(std::atomic<u64>& slot, u64 value) {
  u64 cur = slot.load(std::memory_order_relaxed);
  while (value < cur &&
         !slot.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Walk both endpoints of a non-tree edge up to their LCA, marking each
// traversed edge-to-parent flag. Racy duplicate stores of 1 are idempotent.
void ck_marking(const SpanningTree& st,
                const std::vector<std::pair<i64, i64>>& non_tree_edges,
                std::vector<char>& marked) {
  const auto& parent = st.rooted.parent;
  const auto& level = st.level;
  parallel_for_balanced(static_cast<i64>(non_tree_edges.size()), [&](i64 i) {
    auto [a, b] = non_tree_edges[i];
    while (a != b) {
      if (level[a] > level[b]) {
        std::atomic_ref<char>(marked[a]).store(1, std::memory_order_relaxed);
        a = parent[a];
      } else if (level[b] > level[a]) {
        std::atomic_ref<char>(marked[b]).store(1, std::memory_order_relaxed);
        b = parent[b];
      } else {
        std::atomic_ref<char>(marked[a]).store(1, std::memory_order_relaxed);
        std::atomic_ref<char>(marked[b]).store(1, std::memory_order_relaxed);
        a = parent[a];
        b = parent[b];
      }
    }
  });
}

BridgeMask unmarked_tree_edges(const AdjacencyIndex& g,
                               const SpanningTree& st,
                               const std::vector<char>& marked) {
  BridgeMask out;
  out.is_bridge.assign(g.m, 0);
  parallel_for(g.n, [&](i64 v) {
    if (st.parent_edge[v] == kNone) return;
    out.is_bridge[st.parent_edge[v]] = marked[v] ? 0 : 1;
  });
  return out;
}

std::vector<std::pair<i64, i64>> collect_non_tree_edges(
    const AdjacencyIndex& g, const std::vector<char>& tree_mask) {
  std::vector<std::pair<i64, i64>> out;
  out.reserve(g.m - (g.n - 1));
  for (i64 v = 0; v < g.n; ++v) {
    auto nbrs = g.neighbors_of(v);
    auto eids = g.edges_of(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!tree_mask[eids[i]] && v < nbrs[i]) out.emplace_back(v, nbrs[i]);
    }
  }
  return out;
}

BridgeMask ck_on_tree(const AdjacencyIndex& g, const SpanningTree& st) {
  auto non_tree = collect_non_tree_edges(g, st.is_tree_edge);
  std::vector<char> marked(g.n, 0);
  ck_marking(st, non_tree, marked);
  return unmarked_tree_edges(g, st, marked);
}

}  // namespace

i64 BridgeMask::count() const {
  return std::count(is_bridge.begin(), is_bridge.end(), char{1});
}

std::vector<char> spanning_tree_hooking(const AdjacencyIndex& g) {
  check_packable(g);
  if (g.n == 0) throw std::invalid_argument("empty graph");
  std::vector<char> mask(g.m, 0);
  if (g.n == 1) return mask;

  std::vector<i64> comp(g.n);
  std::iota(comp.begin(), comp.end(), 0);
  std::vector<i64> hook(g.n);
  auto best = std::make_unique<std::atomic<u64>[]>(g.n);

  while (true) {
    parallel_for(g.n, [&](i64 c) {
      best[c].store(kNoCandidate, std::memory_order_relaxed);
      hook[c] = c;
    });
    // Each component's minimum (adjacent component, edge id) pair.
    parallel_for(g.n, [&](i64 u) {
      auto nbrs = g.neighbors_of(u);
      auto eids = g.edges_of(u);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        i64 cu = comp[u], cv = comp[nbrs[i]];
        if (cu == cv) continue;
        atomic_min_u64(best[cu],
                       (static_cast<u64>(cv) << 32) | static_cast<u64>(eids[i]));
      }
    });
    std::atomic<i64> hooks{0};
    parallel_for(g.n, [&](i64 c) {
      u64 b = best[c].load(std::memory_order_relaxed);
      if (b == kNoCandidate) return;
      i64 target = static_cast<i64>(b >> 32);
      if (target >= c) return;  // only hook toward smaller labels
      hook[c] = target;
      mask[b & 0xffffffff] = 1;
      hooks.fetch_add(1, std::memory_order_relaxed);
    });
    if (hooks.load() == 0) {
      bool connected = true;
      for (i64 v = 0; v < g.n && connected; ++v) connected = comp[v] == comp[0];
      if (!connected) {
        throw std::invalid_argument("disconnected graph; extract the largest "
                                    "component first");
      }
      break;
    }
    parallel_for(g.n, [&](i64 v) {
      i64 r = comp[v];
      while (hook[r] != r) r = hook[r];
      comp[v] = r;
    });
  }
  return mask;
}

SpanningTree euler_root_tree(const AdjacencyIndex& g,
                             const std::vector<char>& tree_mask, i64 root) {
  EdgeList tree;
  tree.n = g.n;
  tree.edges.reserve(g.n - 1);
  std::vector<i64> tree_edge_id;
  tree_edge_id.reserve(g.n - 1);
  for (i64 e = 0; e < g.m; ++e) {
    if (tree_mask[e]) tree_edge_id.push_back(e);
  }
  // Recover endpoints from the adjacency index.
  std::vector<std::pair<i64, i64>> endpoints(g.m, {kNone, kNone});
  for (i64 v = 0; v < g.n; ++v) {
    auto eids = g.edges_of(v);
    auto nbrs = g.neighbors_of(v);
    for (std::size_t i = 0; i < eids.size(); ++i) {
      if (tree_mask[eids[i]] && v < nbrs[i]) endpoints[eids[i]] = {v, nbrs[i]};
    }
  }
  for (i64 e : tree_edge_id) tree.edges.push_back(endpoints[e]);

  EulerTour tour = linearize(build_half_edges(tree), root);
  NodeStats stats = node_stats(tour);

  SpanningTree st;
  st.is_tree_edge = tree_mask;
  st.rooted = RootedTree{g.n, root, stats.parent};
  st.level = stats.level;
  st.parent_edge.assign(g.n, kNone);
  for (std::size_t i = 0; i < tree_edge_id.size(); ++i) {
    auto [u, v] = tree.edges[i];
    i64 child = stats.parent[u] == v ? u : v;
    st.parent_edge[child] = tree_edge_id[i];
  }
  st.stats = std::move(stats);
  return st;
}

SpanningTree bfs_tree(const AdjacencyIndex& g, i64 root) {
  check_packable(g);
  SpanningTree st;
  st.is_tree_edge.assign(g.m, 0);
  st.level.assign(g.n, kNone);
  st.parent_edge.assign(g.n, kNone);
  st.rooted = RootedTree{g.n, root, std::vector<i64>(g.n, kNone)};

  auto candidate = std::make_unique<std::atomic<u64>[]>(g.n);
  parallel_for(g.n, [&](i64 v) {
    candidate[v].store(kNoCandidate, std::memory_order_relaxed);
  });
  std::vector<i64> frontier{root};
  st.level[root] = 0;
  i64 depth = 0;
  i64 visited = 1;
  while (!frontier.empty()) {
    // Pass 1: minimum-id parent proposals for the next level.
    parallel_for_balanced(static_cast<i64>(frontier.size()), [&](i64 i) {
      i64 u = frontier[i];
      auto nbrs = g.neighbors_of(u);
      auto eids = g.edges_of(u);
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (st.level[nbrs[j]] != kNone) continue;
        atomic_min_u64(candidate[nbrs[j]],
                       (static_cast<u64>(u) << 32) | static_cast<u64>(eids[j]));
      }
    });
    // Pass 2: commit winners and build the next frontier.
    std::vector<i64> next;
    for (i64 u : frontier) {
      for (i64 v : g.neighbors_of(u)) {
        if (st.level[v] != kNone) continue;
        u64 c = candidate[v].load(std::memory_order_relaxed);
        if (static_cast<i64>(c >> 32) != u) continue;
        st.level[v] = depth + 1;
        st.rooted.parent[v] = u;
        st.parent_edge[v] = static_cast<i64>(c & 0xffffffff);
        st.is_tree_edge[st.parent_edge[v]] = 1;
        next.push_back(v);
        ++visited;
      }
    }
    frontier.swap(next);
    ++depth;
  }
  if (visited != g.n) {
    throw std::invalid_argument("disconnected graph; extract the largest "
                                "component first");
  }
  return st;
}

LowHigh low_high(const AdjacencyIndex& g, const SpanningTree& st,
                 const NodeStats& stats) {
  const i64 n = g.n;
  const i64 slots = 2 * g.m;
  std::vector<i64> vals_min(slots), vals_max(slots);
  parallel_for(slots, [&](i64 i) {
    bool tree = st.is_tree_edge[g.edge_ids[i]];
    vals_min[i] = tree ? kPlusInf : stats.preorder[g.neighbors[i]];
    vals_max[i] = tree ? kMinusInf : stats.preorder[g.neighbors[i]];
  });
  auto min_op = [](i64 a, i64 b) { return std::min(a, b); };
  auto max_op = [](i64 a, i64 b) { return std::max(a, b); };
  std::vector<i64> node_min =
      segmented_reduce(vals_min, g.offsets, min_op, kPlusInf);
  std::vector<i64> node_max =
      segmented_reduce(vals_max, g.offsets, max_op, kMinusInf);

  // Arrange per-node extremes in preorder so subtrees become ranges.
  std::vector<i64> by_pre_min(n), by_pre_max(n);
  parallel_for(n, [&](i64 v) {
    by_pre_min[stats.preorder[v] - 1] = std::min(node_min[v], stats.preorder[v]);
    by_pre_max[stats.preorder[v] - 1] = std::max(node_max[v], stats.preorder[v]);
  });
  RangeIndex rmq_min_idx(by_pre_min);
  RangeIndex rmq_max_idx(by_pre_max);

  LowHigh lh;
  lh.low.resize(n);
  lh.high.resize(n);
  parallel_for(n, [&](i64 v) {
    i64 lo = stats.preorder[v] - 1;
    i64 hi = lo + stats.size[v] - 1;
    lh.low[v] = rmq_min_idx.min(lo, hi);
    lh.high[v] = rmq_max_idx.max(lo, hi);
  });
  return lh;
}

BridgeMask tv_bridges_on_tree(const AdjacencyIndex& g,
                              const std::vector<char>& tree_mask,
                              PhaseTimes* times) {
  auto t0 = Clock::now();
  SpanningTree st = euler_root_tree(g, tree_mask, 0);
  if (times) times->add("euler", elapsed_ns(t0));

  auto t1 = Clock::now();
  LowHigh lh = low_high(g, st, *st.stats);
  BridgeMask out;
  out.is_bridge.assign(g.m, 0);
  const NodeStats& stats = *st.stats;
  parallel_for(g.n, [&](i64 v) {
    if (st.parent_edge[v] == kNone) return;
    bool inside = lh.low[v] >= stats.preorder[v] &&
                  lh.high[v] < stats.preorder[v] + stats.size[v];
    out.is_bridge[st.parent_edge[v]] = inside ? 1 : 0;
  });
  if (times) times->add("lowhigh", elapsed_ns(t1));
  return out;
}

BridgeMask tv_bridges(const AdjacencyIndex& g, PhaseTimes* times) {
  auto t0 = Clock::now();
  std::vector<char> mask = spanning_tree_hooking(g);
  if (times) times->add("spanning", elapsed_ns(t0));
  return tv_bridges_on_tree(g, mask, times);
}

BridgeMask ck_bridges(const AdjacencyIndex& g, PhaseTimes* times) {
  auto t0 = Clock::now();
  SpanningTree st = bfs_tree(g, 0);
  if (times) times->add("spanning", elapsed_ns(t0));
  auto t1 = Clock::now();
  BridgeMask out = ck_on_tree(g, st);
  if (times) times->add("marking", elapsed_ns(t1));
  return out;
}

BridgeMask hybrid_bridges(const AdjacencyIndex& g, PhaseTimes* times) {
  auto t0 = Clock::now();
  std::vector<char> mask = spanning_tree_hooking(g);
  if (times) times->add("spanning", elapsed_ns(t0));
  auto t1 = Clock::now();
  SpanningTree st = euler_root_tree(g, mask, 0);
  if (times) times->add("euler", elapsed_ns(t1));
  auto t2 = Clock::now();
  BridgeMask out = ck_on_tree(g, st);
  if (times) times->add("marking", elapsed_ns(t2));
  return out;
}

BridgeMask dfs_bridges(const AdjacencyIndex& g, PhaseTimes* times) {
  auto t0 = Clock::now();
  BridgeMask out;
  out.is_bridge.assign(g.m, 0);
  std::vector<i64> pre(g.n, 0), low(g.n, 0), cursor(g.n, 0), entry_edge(g.n,
                                                                        kNone);
  std::vector<i64> stack;
  stack.reserve(g.n);
  stack.push_back(0);
  i64 counter = 0;
  pre[0] = low[0] = ++counter;
  while (!stack.empty()) {
    i64 v = stack.back();
    if (cursor[v] < g.degree(v)) {
      i64 i = g.offsets[v] + cursor[v]++;
      i64 w = g.neighbors[i];
      i64 e = g.edge_ids[i];
      if (e == entry_edge[v]) continue;
      if (pre[w] == 0) {
        pre[w] = low[w] = ++counter;
        entry_edge[w] = e;
        stack.push_back(w);
      } else {
        low[v] = std::min(low[v], pre[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        i64 p = stack.back();
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= pre[v]) out.is_bridge[entry_edge[v]] = 1;
      }
    }
  }
  if (counter != g.n) {
    throw std::invalid_argument("disconnected graph; extract the largest "
                                "component first");
  }
  if (times) times->add("dfs", elapsed_ns(t0));
  return out;
}

BridgeMask brute_force_bridges(const AdjacencyIndex& g) {
  BridgeMask out;
  out.is_bridge.assign(g.m, 0);
  parallel_for_balanced(g.m, [&](i64 skip) {
    std::vector<char> seen(g.n, 0);
    std::vector<i64> stack{0};
    seen[0] = 1;
    i64 reached = 1;
    while (!stack.empty()) {
      i64 v = stack.back();
      stack.pop_back();
      auto nbrs = g.neighbors_of(v);
      auto eids = g.edges_of(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (eids[i] == skip || seen[nbrs[i]]) continue;
        seen[nbrs[i]] = 1;
        ++reached;
        stack.push_back(nbrs[i]);
      }
    }
    out.is_bridge[skip] = reached < g.n ? 1 : 0;
  });
  return out;
}

}  // namespace ett
