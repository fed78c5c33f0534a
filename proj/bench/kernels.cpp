// Serial versus OpenMP timings for the parallel kernels. The second argument
// of every benchmark selects the execution policy: 0 serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "geoclique/cliquefront.hpp"
#include "geoclique/eptas.hpp"
#include "geoclique/generators.hpp"
#include "geoclique/geometry.hpp"
#include "geoclique/oddcycle.hpp"

using namespace geoclique;

namespace {

Exec policy(const benchmark::State& state) { return state.range(1) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) {
    state.SetLabel(state.range(1) == 0 ? "serial" : "parallel threads=" + std::to_string(thread_count()));
}

void BM_IntersectionGraph(benchmark::State& state) {
    const auto inst = gen_random_instance(RandomKind::balls3d, static_cast<int>(state.range(0)), {0.5, 0.5, 8.0, 1.0}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(intersection_graph(inst, kDefaultMargin, policy(state)));
    label(state);
}
BENCHMARK(BM_IntersectionGraph)->ArgsProduct({{500, 2000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ShortestOddCycle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_graph(n, 3.0 / n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(shortest_odd_cycle(g, policy(state)));
    label(state);
}
BENCHMARK(BM_ShortestOddCycle)->ArgsProduct({{200, 800}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RunEptas(benchmark::State& state) {
    const auto inst = gen_random_instance(RandomKind::disks2d, static_cast<int>(state.range(0)), {0.5, 1.5, 5.0, 1.0}, 3);
    const Graph h = complement(intersection_graph(inst).graph);
    EptasParams p;
    p.epsilon = 0.2;
    p.beta = 1.0 / 6.0;
    p.seed = 7;
    p.exec = policy(state);
    for (auto _ : state) benchmark::DoNotOptimize(run_eptas(h, p));
    label(state);
}
BENCHMARK(BM_RunEptas)->ArgsProduct({{24, 40}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ExactUnitDisk(benchmark::State& state) {
    const auto inst = gen_random_instance(RandomKind::disks2d, static_cast<int>(state.range(0)), {1.0, 1.0, 6.0, 1.0}, 4);
    std::vector<Point> centers;
    for (const auto& b : inst.balls) centers.push_back(b.center);
    for (auto _ : state) benchmark::DoNotOptimize(exact_unit_disk_clique(centers, 1.0, policy(state)));
    label(state);
}
BENCHMARK(BM_ExactUnitDisk)->ArgsProduct({{40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_DisksFrontend(benchmark::State& state) {
    const auto inst = gen_random_instance(RandomKind::disks2d, static_cast<int>(state.range(0)), {0.5, 1.5, 5.0, 1.0}, 5);
    EptasParams p;
    p.epsilon = 0.2;
    p.seed = 9;
    p.exec = policy(state);
    for (auto _ : state) benchmark::DoNotOptimize(max_clique_disks(inst, p));
    label(state);
}
BENCHMARK(BM_DisksFrontend)->ArgsProduct({{18, 30}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
