#include <benchmark/benchmark.h>

#include "ett/bridges.hpp"
#include "ett/generators.hpp"
#include "ett/lca.hpp"

using namespace ett;

namespace {

void bm_euler_build(benchmark::State& state) {
  RootedTree t = grasp_tree({state.range(0), kGraspInfinity, 1});
  EdgeList edges = tree_edges(t);
  for (auto _ : state) {
    EulerTour tour = linearize(build_half_edges(edges), t.root);
    benchmark::DoNotOptimize(node_stats(tour));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_euler_build)->Range(1 << 12, 1 << 20);

LinkedListArray bench_list(i64 k) {
  // The Euler tour of a random tree provides a realistic list.
  RootedTree t = grasp_tree({(k + 2) / 2, kGraspInfinity, 7});
  EulerTour tour = linearize(build_half_edges(tree_edges(t)), t.root);
  LinkedListArray list;
  i64 steps = static_cast<i64>(tour.order.size());
  list.succ.assign(steps, kTail);
  list.head = tour.order[0];
  for (i64 i = 0; i + 1 < steps; ++i) list.succ[tour.order[i]] =
      tour.order[i + 1];
  return list;
}

void bm_list_rank_sequential(benchmark::State& state) {
  LinkedListArray list = bench_list(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(list_rank_sequential(list));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_list_rank_sequential)->Range(1 << 14, 1 << 22);

void bm_list_rank_parallel(benchmark::State& state) {
  LinkedListArray list = bench_list(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(list_rank(list));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_list_rank_parallel)->Range(1 << 14, 1 << 22);

template <class Index, Index (*Build)(const RootedTree&),
          i64 (*Query)(const Index&, i64, i64)>
void bm_lca_queries(benchmark::State& state) {
  i64 n = state.range(0);
  RootedTree t = grasp_tree({n, kGraspInfinity, 3});
  Index idx = Build(t);
  auto queries = sample_queries(n, 1 << 16, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(answer_batch(
        [&](i64 x, i64 y) { return Query(idx, x, y); }, queries, 1 << 16));
  }
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(bm_lca_queries<InlabelIndex, inlabel_build, inlabel_lca>)
    ->Range(1 << 14, 1 << 20);
BENCHMARK(bm_lca_queries<NaiveIndex, naive_build, naive_lca>)
    ->Range(1 << 14, 1 << 20);
BENCHMARK(bm_lca_queries<RmqLcaIndex, rmq_lca_build, rmq_lca>)
    ->Range(1 << 14, 1 << 20);

template <BridgeMask (*Engine)(const AdjacencyIndex&, PhaseTimes*)>
void bm_bridges(benchmark::State& state) {
  i64 n = state.range(0);
  EdgeList g = random_connected_graph(n, n * 2, 9);
  AdjacencyIndex adj = build_adjacency(g);
  for (auto _ : state) benchmark::DoNotOptimize(Engine(adj, nullptr));
  state.SetItemsProcessed(state.iterations() * g.m());
}
BENCHMARK(bm_bridges<tv_bridges>)->Range(1 << 12, 1 << 18);
BENCHMARK(bm_bridges<ck_bridges>)->Range(1 << 12, 1 << 18);
BENCHMARK(bm_bridges<hybrid_bridges>)->Range(1 << 12, 1 << 18);
BENCHMARK(bm_bridges<dfs_bridges>)->Range(1 << 12, 1 << 18);

}  // namespace

BENCHMARK_MAIN();
