#include <algorithm>

#include "doctest.h"
#include "ett/euler.hpp"
#include "ett/generators.hpp"
#include "ett/rng.hpp"
#include "oracles.hpp"

using namespace ett;

namespace {

// The worked six-node example: 0 - {2, 3, 4}, 2 - {1, 5}.
EdgeList example_tree() {
  return EdgeList{6, {{0, 2}, {2, 1}, {2, 5}, {0, 3}, {0, 4}}};
}

std::vector<std::pair<i64, i64>> half_edge_pairs(const HalfEdgeStructure& h) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 e = 0; e < h.half_edge_count(); ++e) {
    out.push_back({h.src[e], h.dst[e]});
  }
  return out;
}

i64 edge_id(const HalfEdgeStructure& h, i64 src, i64 dst) {
  for (i64 e = 0; e < h.half_edge_count(); ++e) {
    if (h.src[e] == src && h.dst[e] == dst) return e;
  }
  REQUIRE(false);
  return kNone;
}

}  // namespace

TEST_CASE("build_half_edges produces the sorted half-edge array") {
  HalfEdgeStructure h = build_half_edges(example_tree());
  std::vector<std::pair<i64, i64>> expected{
      {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 0},
      {2, 1}, {2, 5}, {3, 0}, {4, 0}, {5, 2}};
  CHECK(half_edge_pairs(h) == expected);
}

TEST_CASE("build_half_edges invariants") {
  HalfEdgeStructure h = build_half_edges(example_tree());
  for (i64 e = 0; e < h.half_edge_count(); ++e) {
    CHECK(h.twin[h.twin[e]] == e);
    CHECK(h.src[h.twin[e]] == h.dst[e]);
    CHECK(h.dst[h.twin[e]] == h.src[e]);
  }
  // next-links over half-edges leaving x form one circular list of deg(x).
  for (i64 x = 0; x < h.n; ++x) {
    i64 start = h.first[x];
    REQUIRE(start != kNone);
    i64 e = start, count = 0;
    do {
      CHECK(h.src[e] == x);
      e = h.next[e];
      ++count;
    } while (e != start);
    i64 deg = 0;
    for (i64 i = 0; i < h.half_edge_count(); ++i) deg += h.src[i] == x;
    CHECK(count == deg);
  }
}

TEST_CASE("build_half_edges wraps next to first") {
  HalfEdgeStructure h = build_half_edges(example_tree());
  CHECK(h.next[edge_id(h, 0, 4)] == edge_id(h, 0, 2));
}

TEST_CASE("build_half_edges single edge") {
  HalfEdgeStructure h = build_half_edges(EdgeList{2, {{0, 1}}});
  CHECK(half_edge_pairs(h) ==
        std::vector<std::pair<i64, i64>>{{0, 1}, {1, 0}});
  CHECK(h.next[0] == 0);
  CHECK(h.next[1] == 1);
}

TEST_CASE("build_half_edges rejects non-trees") {
  CHECK_THROWS_AS(build_half_edges(EdgeList{3, {{0, 1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_half_edges(EdgeList{4, {{0, 1}, {2, 3}, {0, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("tour_successor follows next of twin") {
  HalfEdgeStructure h = build_half_edges(example_tree());
  CHECK(tour_successor(h, edge_id(h, 2, 0)) == edge_id(h, 0, 3));
  CHECK(tour_successor(h, edge_id(h, 0, 2)) == edge_id(h, 2, 1));

  HalfEdgeStructure single = build_half_edges(EdgeList{2, {{0, 1}}});
  CHECK(tour_successor(single, 0) == 1);
  CHECK(tour_successor(single, 1) == 0);
}

TEST_CASE("linearize reproduces the ten-edge tour from root 0") {
  EulerTour tour = linearize(build_half_edges(example_tree()), 0);
  std::vector<std::pair<i64, i64>> expected{
      {0, 2}, {2, 1}, {1, 2}, {2, 5}, {5, 2},
      {2, 0}, {0, 3}, {3, 0}, {0, 4}, {4, 0}};
  REQUIRE(tour.order.size() == expected.size());
  for (std::size_t t = 0; t < expected.size(); ++t) {
    i64 e = tour.order[t];
    CHECK(std::pair{tour.structure.src[e], tour.structure.dst[e]} ==
          expected[t]);
    CHECK(tour.pos[e] == static_cast<i64>(t));
  }
}

TEST_CASE("linearize single edge") {
  EulerTour tour = linearize(build_half_edges(EdgeList{2, {{0, 1}}}), 0);
  REQUIRE(tour.order.size() == 2);
  CHECK(tour.structure.src[tour.order[0]] == 0);
  CHECK(tour.structure.src[tour.order[1]] == 1);
}

TEST_CASE("linearize from root 2 starts at its first sorted half-edge") {
  EulerTour tour = linearize(build_half_edges(example_tree()), 2);
  i64 e0 = tour.order[0];
  CHECK(tour.structure.src[e0] == 2);
  CHECK(tour.structure.dst[e0] == 0);
  // Consecutive tour edges chain through shared endpoints.
  for (std::size_t t = 0; t + 1 < tour.order.size(); ++t) {
    CHECK(tour.structure.dst[tour.order[t]] ==
          tour.structure.src[tour.order[t + 1]]);
  }
}

TEST_CASE("node_stats on the example tree") {
  NodeStats s = node_stats(linearize(build_half_edges(example_tree()), 0));
  CHECK(s.preorder == std::vector<i64>{1, 3, 2, 5, 6, 4});
  CHECK(s.size[2] == 3);
  CHECK(s.size[0] == 6);
  CHECK(s.level == std::vector<i64>{0, 2, 1, 1, 1, 2});
  CHECK(s.parent[5] == 2);
  CHECK(s.parent[3] == 0);
  CHECK(s.parent[0] == kNone);
}

TEST_CASE("node_stats equals sequential DFS in circular-list order") {
  SplitMix64 rng(77);
  for (int rep = 0; rep < 30; ++rep) {
    i64 n = 1 + static_cast<i64>(rng.next_below(4096));
    RootedTree t = permute_labels(
        grasp_tree({n, rep % 2 ? u64{4} : kGraspInfinity, rng.next()}),
        rng.next());
    EdgeList edges = tree_edges(t);
    NodeStats s = node_stats(linearize(build_half_edges(edges), t.root));
    oracle::DfsStats ref = oracle::dcel_order_dfs(edges, t.root);
    CHECK(s.preorder == ref.preorder);
    CHECK(s.size == ref.size);
    CHECK(s.level == ref.level);
    CHECK(s.parent == ref.parent);
  }
}

TEST_CASE("tour conservation and laminar preorder intervals") {
  SplitMix64 rng(88);
  for (int rep = 0; rep < 10; ++rep) {
    i64 n = 2 + static_cast<i64>(rng.next_below(512));
    RootedTree t = grasp_tree({n, kGraspInfinity, rng.next()});
    EulerTour tour = linearize(build_half_edges(tree_edges(t)), t.root);
    const auto& h = tour.structure;
    i64 down_count = 0, balance = 0;
    for (i64 e : tour.order) {
      bool down = tour.pos[e] < tour.pos[h.twin[e]];
      down_count += down;
      balance += down ? 1 : -1;
    }
    CHECK(down_count == n - 1);
    CHECK(balance == 0);

    NodeStats s = node_stats(tour);
    for (i64 a = 0; a < n; ++a) {
      for (i64 b = a + 1; b < n; ++b) {
        i64 la = s.preorder[a], ra = la + s.size[a] - 1;
        i64 lb = s.preorder[b], rb = lb + s.size[b] - 1;
        bool disjoint = ra < lb || rb < la;
        bool nested = (la <= lb && rb <= ra) || (lb <= la && ra <= rb);
        CHECK((disjoint || nested));
      }
    }
  }
}

TEST_CASE("single-node tree statistics") {
  NodeStats s = node_stats(linearize(build_half_edges(EdgeList{1, {}}), 0));
  CHECK(s.preorder == std::vector<i64>{1});
  CHECK(s.size == std::vector<i64>{1});
  CHECK(s.level == std::vector<i64>{0});
  CHECK(s.parent == std::vector<i64>{kNone});
}
