#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "ett/graph.hpp"
#include "ett/rng.hpp"

namespace ett {

inline constexpr u64 kGraspInfinity = std::numeric_limits<u64>::max();

struct GraspParams {
  i64 n = 1;
  u64 gamma = kGraspInfinity;  // how far back a node may pick its parent
  u64 seed = 0;
};

// Node 0 is the root; parent of node i is uniform over
// [max(i - gamma, 0), i - 1]. gamma = 1 yields a path; gamma = infinity
// gives expected average depth ln n.
RootedTree grasp_tree(const GraspParams& params);

// Preferential-attachment tree: parent of node i is drawn proportionally
// to current degrees, via the flat endpoint-list trick.
RootedTree barabasi_tree(i64 n, u64 seed);

// Structure-preserving relabeling through a seeded uniform permutation.
RootedTree permute_labels(const RootedTree& tree, u64 seed);

// q independent uniform ordered pairs from [0, n) x [0, n).
std::vector<std::pair<i64, i64>> sample_queries(i64 n, i64 q, u64 seed);

// Seeded grasp(infinity) spanning tree plus m - (n-1) distinct uniform
// non-tree edges; connected by construction.
EdgeList random_connected_graph(i64 n, i64 m, u64 seed);

}  // namespace ett
