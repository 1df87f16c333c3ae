#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tailocus/branches.hpp"
#include "tailocus/dualgraph.hpp"
#include "tailocus/ratlinalg.hpp"
#include "tailocus/strata.hpp"

using namespace tailocus;

namespace {

// genus-1 core with `rays` contracted chains of length 2 hanging off it,
// every chain ending in a positive-degree tail; maximizes admissible subsets
DualGraph star_graph(int rays) {
    std::vector<Vertex> vertices = {{"E", 1, 0, {}}};
    std::vector<Edge> edges;
    for (int i = 0; i < rays; ++i) {
        const std::string mid = "c" + std::to_string(i);
        const std::string tip = "t" + std::to_string(i);
        vertices.push_back({mid, 0, 0, {}});
        vertices.push_back({tip, 0, 1, {}});
        edges.push_back({"E", mid});
        edges.push_back({mid, tip});
        edges.push_back({mid, tip});
    }
    return make_graph(3, 0, vertices, edges);
}

RatMatrix random_matrix(int rows, int cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 20);
    RatMatrix m(rows, RatVector(cols));
    for (auto& row : m) {
        for (auto& x : row) x = Rational(num(rng), den(rng));
    }
    return m;
}

void bm_enumerate_strata(benchmark::State& state) {
    const ModuliContext ctx{4, state.range(0), 3};
    const int m = static_cast<int>(state.range(0)) / 2 + 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_strata(ctx, m));
    }
}
BENCHMARK(bm_enumerate_strata)->Arg(12)->Arg(24)->Arg(40);

void bm_enumerate_branches(benchmark::State& state) {
    const auto g = star_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_branches(g));
    }
}
BENCHMARK(bm_enumerate_branches)->Arg(4)->Arg(7)->Arg(10);

void bm_blowup_schedule(benchmark::State& state) {
    const ModuliContext ctx{3, state.range(0), 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(blowup_schedule(ctx, ScheduleVariant::main_component));
    }
}
BENCHMARK(bm_blowup_schedule)->Arg(8)->Arg(16);

void bm_exact_rank(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const auto m = random_matrix(size, size, 7u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_rank(m));
    }
}
BENCHMARK(bm_exact_rank)->Arg(8)->Arg(16)->Arg(32);

void bm_row_dependence(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    auto m = random_matrix(size, size - 1, 11u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(row_dependence(m));
    }
}
BENCHMARK(bm_row_dependence)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
