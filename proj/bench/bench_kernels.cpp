#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "autequiv/diagram_gen.hpp"
#include "autequiv/hom_matrix.hpp"
#include "autequiv/hom_reference.hpp"
#include "autequiv/perm_group.hpp"

using namespace autequiv;

namespace {

const char* const kGraphs[] = {"S2_A", "C5", "C4_A", "LOOP3"};

struct Batch {
  Graph g;
  std::vector<BLG> diagrams;
};

Batch batch(int which, unsigned k, unsigned l) {
  Batch b{builtin_graph(kGraphs[which]), {}};
  for (auto& d : generate_diagrams(b.g, k, l)) b.diagrams.push_back(std::move(d.diagram));
  return b;
}

void BM_HomMatricesParallel(benchmark::State& st) {
  const Batch b = batch(static_cast<int>(st.range(0)), 2, 1);
  for (auto _ : st) benchmark::DoNotOptimize(hom_matrices(b.diagrams, b.g));
  st.SetLabel(kGraphs[st.range(0)]);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(b.diagrams.size()));
}

void BM_HomMatricesSerial(benchmark::State& st) {
  const Batch b = batch(static_cast<int>(st.range(0)), 2, 1);
  for (auto _ : st) benchmark::DoNotOptimize(reference::hom_matrices_serial(b.diagrams, b.g));
  st.SetLabel(kGraphs[st.range(0)]);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(b.diagrams.size()));
}

// Enumerates every map, so only the small (1,1) batch.
void BM_HomMatricesNaive(benchmark::State& st) {
  const Batch b = batch(static_cast<int>(st.range(0)), 1, 1);
  for (auto _ : st)
    for (const BLG& h : b.diagrams) benchmark::DoNotOptimize(reference::hom_matrix_naive(h, b.g));
  st.SetLabel(kGraphs[st.range(0)]);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(b.diagrams.size()));
}

void BM_HomMatricesFastSmall(benchmark::State& st) {
  const Batch b = batch(static_cast<int>(st.range(0)), 1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(hom_matrices(b.diagrams, b.g));
  st.SetLabel(kGraphs[st.range(0)]);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(b.diagrams.size()));
}

Graph aut_graph(std::int64_t n) { return Graph::edgeless(static_cast<int>(n)); }

void BM_AutomorphismsParallel(benchmark::State& st) {
  const Graph g = aut_graph(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(automorphism_group(g));
}

void BM_AutomorphismsReference(benchmark::State& st) {
  const Graph g = aut_graph(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(automorphism_group_reference(g));
}

}  // namespace

BENCHMARK(BM_HomMatricesParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HomMatricesSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HomMatricesNaive)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HomMatricesFastSmall)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AutomorphismsParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AutomorphismsReference)->DenseRange(5, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
