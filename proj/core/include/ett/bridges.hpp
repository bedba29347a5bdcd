#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ett/euler.hpp"
#include "ett/graph.hpp"

namespace ett {

struct SpanningTree {
  std::vector<char> is_tree_edge;  // per input edge
  RootedTree rooted;
  std::vector<i64> level;
  std::vector<i64> parent_edge;        // input edge id to parent, kNone at root
  std::optional<NodeStats> stats;      // present for Euler-rooted trees
};

struct BridgeMask {
  std::vector<char> is_bridge;  // per input edge

  i64 count() const;
};

// Subtree min/max over preorders of non-tree edge endpoints, seeded with
// each node's own preorder.
struct LowHigh {
  std::vector<i64> low;
  std::vector<i64> high;
};

// Wall times of an engine's internal phases, for the harness.
struct PhaseTimes {
  std::vector<std::pair<std::string, i64>> nanos;

  void add(std::string name, i64 ns) { nanos.emplace_back(std::move(name), ns); }
};

// Deterministic parallel hooking: each component repeatedly hooks to its
// minimum adjacent component via the minimum edge id realizing that
// adjacency. Throws on disconnected input. Returns the tree-edge mask.
std::vector<char> spanning_tree_hooking(const AdjacencyIndex& g);

// Roots a spanning-tree mask via the Euler tour; stats carry parent/level.
SpanningTree euler_root_tree(const AdjacencyIndex& g,
                             const std::vector<char>& tree_mask, i64 root);

// Level-synchronous BFS with minimum-id parent selection.
SpanningTree bfs_tree(const AdjacencyIndex& g, i64 root);

LowHigh low_high(const AdjacencyIndex& g, const SpanningTree& st,
                 const NodeStats& stats);

BridgeMask tv_bridges(const AdjacencyIndex& g, PhaseTimes* times = nullptr);
// Same criterion evaluated on a caller-supplied spanning tree (bridges are
// a graph property, so the output must not depend on the tree).
BridgeMask tv_bridges_on_tree(const AdjacencyIndex& g,
                              const std::vector<char>& tree_mask,
                              PhaseTimes* times = nullptr);
BridgeMask ck_bridges(const AdjacencyIndex& g, PhaseTimes* times = nullptr);
BridgeMask hybrid_bridges(const AdjacencyIndex& g, PhaseTimes* times = nullptr);
BridgeMask dfs_bridges(const AdjacencyIndex& g, PhaseTimes* times = nullptr);

// Test oracle: delete each edge and re-check connectivity. O(n * m).
BridgeMask brute_force_bridges(const AdjacencyIndex& g);

}  // namespace ett
