#pragma once

#include <vector>

#include "ett/graph.hpp"

namespace ett {

// DCEL-like half-edge representation of a tree. Half-edge ids index the
// lexicographically sorted array B of directed half-edges; twin pairs are
// the two directions of one undirected edge.
struct HalfEdgeStructure {
  i64 n = 0;
  std::vector<i64> src;   // 2(n-1)
  std::vector<i64> dst;   // 2(n-1)
  std::vector<i64> twin;  // involution, src[twin[e]] == dst[e]
  std::vector<i64> next;  // per-vertex circular list in sorted order
  std::vector<i64> first; // first half-edge leaving each vertex

  i64 half_edge_count() const { return static_cast<i64>(src.size()); }
};

// Throws std::invalid_argument unless the edge list is a tree
// (m == n-1 and connected). Callers whose edges provably come from a
// validated parent array can pass skip_validation to drop that check.
HalfEdgeStructure build_half_edges(const EdgeList& tree,
                                   bool skip_validation = false);

// succ(e) = next(twin(e)).
inline i64 tour_successor(const HalfEdgeStructure& h, i64 e) {
  return h.next[h.twin[e]];
}

// The Euler tour linearized into an array by cutting the cyclic successor
// relation just before first[root].
struct EulerTour {
  HalfEdgeStructure structure;
  i64 root = 0;
  std::vector<i64> order;  // half-edge ids in tour sequence
  std::vector<i64> pos;    // inverse: pos[order[t]] == t
};

EulerTour linearize(HalfEdgeStructure h, i64 root);

// Scan-derived per-node statistics; preorder is 1-based.
struct NodeStats {
  std::vector<i64> preorder;
  std::vector<i64> size;
  std::vector<i64> level;
  std::vector<i64> parent;  // kNone for the root
};

NodeStats node_stats(const EulerTour& tour);

}  // namespace ett
