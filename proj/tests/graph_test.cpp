#include <algorithm>
#include <map>
#include <sstream>

#include "doctest.h"
#include "ett/graph.hpp"
#include "ett/generators.hpp"
#include "oracles.hpp"

using namespace ett;

TEST_CASE("parse_edge_list basics") {
  std::istringstream in("0 1\n1 2\n");
  EdgeList g = parse_edge_list(in);
  CHECK(g.n == 3);
  REQUIRE(g.m() == 2);
  CHECK(g.edges[0] == std::pair<i64, i64>{0, 1});
  CHECK(g.edges[1] == std::pair<i64, i64>{1, 2});
}

TEST_CASE("parse_edge_list drops duplicates and self-loops, reports counts") {
  std::istringstream in("0 1\n1 0\n0 0\n");
  ParseStats stats;
  EdgeList g = parse_edge_list(in, &stats);
  CHECK(g.n == 2);
  REQUIRE(g.m() == 1);
  CHECK(g.edges[0] == std::pair<i64, i64>{0, 1});
  CHECK(stats.removed() == 2);
  CHECK(stats.self_loops_removed == 1);
  CHECK(stats.duplicates_removed == 1);
}

TEST_CASE("parse_edge_list skips comments, n from max id") {
  std::istringstream in("# c\n2 5\n");
  EdgeList g = parse_edge_list(in);
  CHECK(g.n == 6);
  REQUIRE(g.m() == 1);
  CHECK(g.edges[0] == std::pair<i64, i64>{2, 5});
}

TEST_CASE("parse_edge_list errors carry line numbers") {
  std::istringstream in("0 1\nfoo 2\n");
  CHECK_THROWS_WITH_AS(parse_edge_list(in),
                       doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("parse_edge_list empty input") {
  std::istringstream in("");
  EdgeList g = parse_edge_list(in);
  CHECK(g.n == 0);
  CHECK(g.m() == 0);
}

TEST_CASE("parse_dimacs_gr basics") {
  std::istringstream in("p sp 3 2\na 1 2 4\na 2 3 1\n");
  EdgeList g = parse_dimacs_gr(in);
  CHECK(g.n == 3);
  REQUIRE(g.m() == 2);
  CHECK(g.edges[0] == std::pair<i64, i64>{0, 1});
  CHECK(g.edges[1] == std::pair<i64, i64>{1, 2});
}

TEST_CASE("parse_dimacs_gr collapses both directions") {
  std::istringstream in("p sp 2 2\na 1 2 1\na 2 1 1\n");
  EdgeList g = parse_dimacs_gr(in);
  CHECK(g.n == 2);
  REQUIRE(g.m() == 1);
  CHECK(g.edges[0] == std::pair<i64, i64>{0, 1});
}

TEST_CASE("parse_dimacs_gr requires a problem line") {
  std::istringstream in("a 1 2 1\n");
  CHECK_THROWS_AS(parse_dimacs_gr(in), std::runtime_error);
}

TEST_CASE("parse_dimacs_gr rejects out-of-range ids") {
  std::istringstream in("p sp 3 1\na 1 4 1\n");
  CHECK_THROWS_AS(parse_dimacs_gr(in), std::runtime_error);
}

TEST_CASE("build_adjacency triangle offsets") {
  EdgeList g{3, {{0, 1}, {1, 2}, {0, 2}}};
  AdjacencyIndex adj = build_adjacency(g);
  CHECK(adj.offsets == std::vector<i64>{0, 2, 4, 6});
}

TEST_CASE("build_adjacency single edge") {
  EdgeList g{2, {{0, 1}}};
  AdjacencyIndex adj = build_adjacency(g);
  CHECK(adj.neighbors == std::vector<i64>{1, 0});
}

TEST_CASE("build_adjacency empty graph") {
  EdgeList g{3, {}};
  AdjacencyIndex adj = build_adjacency(g);
  CHECK(adj.offsets == std::vector<i64>{0, 0, 0, 0});
}

TEST_CASE("adjacency flattening reproduces the doubled edge multiset") {
  for (u64 seed = 0; seed < 10; ++seed) {
    EdgeList g = random_connected_graph(60, 150, seed);
    AdjacencyIndex adj = build_adjacency(g);
    std::multiset<std::pair<i64, i64>> expected, got;
    for (auto [u, v] : g.edges) {
      expected.insert({u, v});
      expected.insert({v, u});
    }
    for (i64 v = 0; v < g.n; ++v) {
      i64 prev = kNone;
      for (i64 w : adj.neighbors_of(v)) {
        CHECK(w >= prev);  // sorted slices
        prev = w;
        got.insert({v, w});
      }
    }
    CHECK(expected == got);
  }
}

TEST_CASE("largest_component picks the triangle over an isolated edge") {
  EdgeList g{5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}};
  ComponentResult res = largest_component(g);
  CHECK(res.graph.n == 3);
  CHECK(res.graph.m() == 3);
  CHECK(res.old_to_new[3] == kNone);
  CHECK(res.old_to_new[4] == kNone);
  auto comps = oracle::components(res.graph);
  CHECK(comps.size() == 1);
}

TEST_CASE("largest_component identity on a connected path") {
  EdgeList g{3, {{0, 1}, {1, 2}}};
  ComponentResult res = largest_component(g);
  CHECK(res.graph.n == 3);
  for (i64 v = 0; v < 3; ++v) CHECK(res.old_to_new[v] == v);
}

TEST_CASE("largest_component ties go to the component with node 0") {
  EdgeList g{4, {{0, 1}, {2, 3}}};
  ComponentResult res = largest_component(g);
  CHECK(res.graph.n == 2);
  CHECK(res.old_to_new[0] == 0);
  CHECK(res.old_to_new[1] == 1);
  CHECK(res.old_to_new[2] == kNone);
}

TEST_CASE("largest_component on empty graph") {
  EdgeList g{0, {}};
  ComponentResult res = largest_component(g);
  CHECK(res.graph.n == 0);
}

TEST_CASE("largest_component output is connected (random graphs)") {
  for (u64 seed = 0; seed < 5; ++seed) {
    EdgeList g = random_connected_graph(40, 60, seed);
    // Punch the graph apart by adding isolated vertices and a far component.
    g.n += 10;
    g.edges.push_back({g.n - 2, g.n - 1});
    ComponentResult res = largest_component(g);
    CHECK(oracle::components(res.graph).size() == 1);
  }
}

TEST_CASE("validate_tree accepts chains and rejects cycles") {
  RootedTree ok{3, 0, {kNone, 0, 1}};
  CHECK_NOTHROW(validate_tree(ok));
  RootedTree cyc{3, 0, {kNone, 2, 1}};
  CHECK_THROWS_AS(validate_tree(cyc), std::invalid_argument);
  RootedTree two_roots{3, 0, {kNone, kNone, 1}};
  CHECK_THROWS_AS(validate_tree(two_roots), std::invalid_argument);
}

TEST_CASE("parent-array file round trip") {
  RootedTree t{5, 2, {2, 0, kNone, 2, 1}};
  std::stringstream s;
  write_parent_tree(s, t);
  RootedTree back = read_parent_tree(s);
  CHECK(back.n == t.n);
  CHECK(back.root == t.root);
  CHECK(back.parent == t.parent);
}

TEST_CASE("edge-list file round trip") {
  EdgeList g = random_connected_graph(30, 50, 7);
  std::stringstream s;
  write_edge_list(s, g);
  EdgeList back = parse_edge_list(s);
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
}
