#include <benchmark/benchmark.h>

#include <random>

#include "jnet/community.hpp"
#include "jnet/dcor.hpp"
#include "jnet/dissimilarity.hpp"
#include "jnet/ingest.hpp"

using namespace jnet;

namespace {

// Journals draw members from a shared pool; sizes roughly match the larger field.
BipartiteIncidence random_incidence(std::size_t journals, std::size_t entities, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution take(p);
  BipartiteIncidence inc;
  for (std::size_t e = 0; e < entities; ++e) inc.entity_labels.push_back("e" + std::to_string(e));
  for (std::size_t j = 0; j < journals; ++j) {
    inc.journal_labels.push_back("J" + std::to_string(j));
    auto& m = inc.membership.emplace_back();
    for (std::size_t e = 0; e < entities; ++e) {
      if (take(gen)) m.push_back(e);
    }
  }
  return inc;
}

void BM_Projection(benchmark::State& state) {
  const auto inc = random_incidence(static_cast<std::size_t>(state.range(0)), 5000, 0.01, 1);
  for (auto _ : state) benchmark::DoNotOptimize(project(inc, NetworkKind::IA));
}
BENCHMARK(BM_Projection)->Arg(80)->Arg(170);

void BM_Jaccard(benchmark::State& state) {
  const auto inc = random_incidence(static_cast<std::size_t>(state.range(0)), 5000, 0.01, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dissim_from_incidence(inc));
}
BENCHMARK(BM_Jaccard)->Arg(80)->Arg(170);

void BM_PermutationTest(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dissim_from_incidence(random_incidence(n, 3000, 0.02, 3));
  const auto b = dissim_from_incidence(random_incidence(n, 3000, 0.02, 4));
  PermTestOptions opt;
  opt.n_permutations = 9999;
  opt.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(perm_test(a, b, opt));
}
BENCHMARK(BM_PermutationTest)->Args({80, 1})->Args({170, 1})->Args({170, 0})->Unit(benchmark::kMillisecond);

void BM_Louvain(benchmark::State& state) {
  const auto inc = random_incidence(static_cast<std::size_t>(state.range(0)), 5000, 0.004, 5);
  const auto g = project(inc, NetworkKind::IE);
  if (g.edges.empty()) {
    state.SkipWithError("no edges");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(louvain(g, {1.0, 1, 10, 1}));
}
BENCHMARK(BM_Louvain)->Arg(80)->Arg(170)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
