#include <benchmark/benchmark.h>

#include <random>

#include "ldlat/blocks.hpp"
#include "ldlat/oracle.hpp"
#include "ldlat/relabel.hpp"
#include "ldlat/treeiso.hpp"
#include "ldlat/zdg.hpp"

using namespace ldlat;

namespace {

// Random recursive tree on n nodes; node i hangs below a uniform earlier node.
RootedTree random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels{"r"};
  std::vector<Node> parent{0};
  for (std::size_t i = 1; i < n; ++i) {
    labels.push_back("t" + std::to_string(i));
    parent.push_back(std::uniform_int_distribution<Node>(0, i - 1)(rng));
  }
  return RootedTree(labels, parent);
}

void BM_BuildLattice(benchmark::State& state) {
  const auto t = random_tree(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_of_tree(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildLattice)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_ZeroDivisorGraph(benchmark::State& state) {
  const auto l = lattice_of_tree(random_tree(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(zero_divisor_graph(l));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ZeroDivisorGraph)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_Recognize(benchmark::State& state) {
  const auto g = non_ancestor_graph(random_tree(state.range(0), 3));
  for (auto _ : state) benchmark::DoNotOptimize(recognize(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Recognize)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_IsoDecide(benchmark::State& state) {
  const auto g = zero_divisor_graph(lattice_of_tree(random_tree(state.range(0), 4)));
  std::mt19937_64 rng(5);
  const auto h = relabeled(g, random_relabeling(g.labels(), rng), rng);
  for (auto _ : state) benchmark::DoNotOptimize(iso_decide(g, h));
}
BENCHMARK(BM_IsoDecide)->RangeMultiplier(2)->Range(8, 256);

void BM_BruteLatticeIso(benchmark::State& state) {
  const auto l = lattice_of_tree(random_tree(state.range(0), 6));
  std::mt19937_64 rng(7);
  const auto m = relabeled(l, random_relabeling(l.labels(), rng), rng);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_lattice_iso(l, m));
}
BENCHMARK(BM_BruteLatticeIso)->DenseRange(6, 14, 4);

void BM_BasicBlock(benchmark::State& state) {
  const auto l = lattice_of_tree(random_tree(state.range(0), 8));
  for (auto _ : state) benchmark::DoNotOptimize(basic_block(l));
}
BENCHMARK(BM_BasicBlock)->RangeMultiplier(2)->Range(8, 128);

void BM_AlignAndLift(benchmark::State& state) {
  auto t = random_tree(state.range(0), 9);
  const auto l1 = lattice_of_tree(t);
  std::mt19937_64 rng(10);
  const auto l2 = relabeled(l1, random_relabeling(l1.labels(), rng), rng);
  const auto f = oracle::brute_graph_iso(zero_divisor_graph(l1), zero_divisor_graph(l2));
  if (!f || !is_adjunct_element(l1, l1.top())) {
    state.SkipWithError("tree has a single branch at the root");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(lift_to_lattice_iso(l1, l2, align_adjuncts(l1, l2, *f)));
}
BENCHMARK(BM_AlignAndLift)->Arg(8)->Arg(12)->Arg(16);

void BM_EnumerateTrees(benchmark::State& state) {
  oracle::EnumerationFilter f;
  f.max_nodes = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_rooted_trees(f));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(6, 10, 2);

}  // namespace

BENCHMARK_MAIN();
