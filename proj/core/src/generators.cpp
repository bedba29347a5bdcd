#include "ett/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ett {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<i64, i64>& p) const {
    u64 h = static_cast<u64>(p.first) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<u64>(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

RootedTree grasp_tree(const GraspParams& params) {
  if (params.n < 1 || params.gamma < 1) {
    throw std::invalid_argument("grasp_tree: n and gamma must be >= 1");
  }
  RootedTree t;
  t.n = params.n;
  t.root = 0;
  t.parent.assign(params.n, kNone);
  SplitMix64 rng(params.seed);
  for (i64 i = 1; i < params.n; ++i) {
    i64 lo = params.gamma >= static_cast<u64>(i)
                 ? 0
                 : i - static_cast<i64>(params.gamma);
    t.parent[i] = rng.next_in(lo, i - 1);
  }
  return t;
}

RootedTree barabasi_tree(i64 n, u64 seed) {
  if (n < 1) throw std::invalid_argument("barabasi_tree: n must be >= 1");
  RootedTree t;
  t.n = n;
  t.root = 0;
  t.parent.assign(n, kNone);
  if (n == 1) return t;
  SplitMix64 rng(seed);
  // Every edge contributes both endpoints; sampling the list uniformly is
  // sampling nodes proportionally to degree.
  std::vector<i64> endpoints;
  endpoints.reserve(2 * (n - 1));
  t.parent[1] = 0;
  endpoints.push_back(0);
  endpoints.push_back(1);
  for (i64 i = 2; i < n; ++i) {
    t.parent[i] = endpoints[rng.next_below(endpoints.size())];
    endpoints.push_back(t.parent[i]);
    endpoints.push_back(i);
  }
  return t;
}

RootedTree permute_labels(const RootedTree& tree, u64 seed) {
  validate_tree(tree);
  std::vector<i64> perm(tree.n);
  for (i64 i = 0; i < tree.n; ++i) perm[i] = i;
  SplitMix64 rng(seed);
  for (i64 i = tree.n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.next_below(static_cast<u64>(i + 1))]);
  }
  RootedTree out;
  out.n = tree.n;
  out.root = perm[tree.root];
  out.parent.assign(tree.n, kNone);
  for (i64 v = 0; v < tree.n; ++v) {
    if (tree.parent[v] != kNone) out.parent[perm[v]] = perm[tree.parent[v]];
  }
  return out;
}

std::vector<std::pair<i64, i64>> sample_queries(i64 n, i64 q, u64 seed) {
  if (n < 1 || q < 0) throw std::invalid_argument("sample_queries: bad params");
  std::vector<std::pair<i64, i64>> out;
  out.reserve(q);
  SplitMix64 rng(seed);
  for (i64 i = 0; i < q; ++i) {
    i64 x = static_cast<i64>(rng.next_below(static_cast<u64>(n)));
    i64 y = static_cast<i64>(rng.next_below(static_cast<u64>(n)));
    out.emplace_back(x, y);
  }
  return out;
}

EdgeList random_connected_graph(i64 n, i64 m, u64 seed) {
  if (n < 1 || m < n - 1 || m > n * (n - 1) / 2) {
    throw std::invalid_argument("random_connected_graph: infeasible edge count");
  }
  RootedTree tree = grasp_tree({n, kGraspInfinity, seed});
  EdgeList g = tree_edges(tree);
  std::unordered_set<std::pair<i64, i64>, PairHash> used(g.edges.begin(),
                                                         g.edges.end());
  SplitMix64 rng(seed ^ 0x6e6f6e2d74726565ULL);
  while (g.m() < m) {
    i64 u = static_cast<i64>(rng.next_below(static_cast<u64>(n)));
    i64 v = static_cast<i64>(rng.next_below(static_cast<u64>(n)));
    if (u == v) continue;
    auto e = std::minmax(u, v);
    if (!used.insert({e.first, e.second}).second) continue;
    g.edges.emplace_back(e.first, e.second);
  }
  return g;
}

}  // namespace ett
