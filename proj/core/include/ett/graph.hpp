#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ett/parallel.hpp"

namespace ett {

// Sentinel for "no node" (e.g. the root's parent).
inline constexpr i64 kNone = -1;

// Undirected simple graph: 0-based dense node ids, no self-loops,
// no duplicate unordered pairs.
struct EdgeList {
  i64 n = 0;
  std::vector<std::pair<i64, i64>> edges;

  i64 m() const { return static_cast<i64>(edges.size()); }
};

struct ParseStats {
  i64 self_loops_removed = 0;
  i64 duplicates_removed = 0;

  i64 removed() const { return self_loops_removed + duplicates_removed; }
};

// Plain edge-list text: two integer tokens per line, '#'/'%' comments.
// n = 1 + max node id seen. Throws std::runtime_error with the line number
// on malformed tokens.
EdgeList parse_edge_list(std::istream& in, ParseStats* stats = nullptr);

// DIMACS .gr: "p sp n m" problem line, "a u v w"/"e u v" arc lines,
// "c" comments. 1-based ids are shifted to 0-based; both-direction arc
// duplicates collapse to one undirected edge.
EdgeList parse_dimacs_gr(std::istream& in, ParseStats* stats = nullptr);

void write_edge_list(std::ostream& out, const EdgeList& g);

// CSR-style neighbor index; neighbors within each vertex slice are sorted
// ascending and edge_ids aligns with neighbors.
struct AdjacencyIndex {
  i64 n = 0;
  i64 m = 0;
  std::vector<i64> offsets;    // n + 1
  std::vector<i64> neighbors;  // 2m
  std::vector<i64> edge_ids;   // 2m

  i64 degree(i64 v) const { return offsets[v + 1] - offsets[v]; }
  std::span<const i64> neighbors_of(i64 v) const {
    return {neighbors.data() + offsets[v],
            static_cast<std::size_t>(degree(v))};
  }
  std::span<const i64> edges_of(i64 v) const {
    return {edge_ids.data() + offsets[v], static_cast<std::size_t>(degree(v))};
  }
};

AdjacencyIndex build_adjacency(const EdgeList& g);

// Parent-array tree; parent[root] == kNone.
struct RootedTree {
  i64 n = 0;
  i64 root = 0;
  std::vector<i64> parent;
};

// Throws std::invalid_argument if the parent array does not encode a tree
// (wrong root count, cycle, or out-of-range parent).
void validate_tree(const RootedTree& t);

// Tree edges {v, parent(v)} as an EdgeList.
EdgeList tree_edges(const RootedTree& t);

struct ComponentResult {
  EdgeList graph;
  std::vector<i64> old_to_new;  // kNone for nodes outside the component
};

// Largest connected component, nodes densely renumbered preserving the
// original id order. Ties go to the component with the smallest minimum
// original id.
ComponentResult largest_component(const EdgeList& g);

// Parent-array tree file: line 1 "n", then n integers, -1 marks the root.
RootedTree read_parent_tree(std::istream& in);
void write_parent_tree(std::ostream& out, const RootedTree& t);

}  // namespace ett
