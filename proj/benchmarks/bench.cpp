// Microbenchmarks for the hot paths: building, parsing, Levi construction,
// the eigensolver, and isomorphism testing.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "ubergraph/format.hpp"
#include "ubergraph/isomorphism.hpp"
#include "ubergraph/levi.hpp"
#include "ubergraph/spectral.hpp"

namespace {

using namespace ubergraph;

// A reproducible layered ubergraph: `vertices` fundamental vertices, `edges`
// edges whose members are drawn from everything declared before them.
Ubergraph layered(std::size_t vertices, std::size_t edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> vertex_labels;
    for (std::size_t i = 0; i < vertices; ++i) vertex_labels.push_back("v" + std::to_string(i));

    std::vector<EdgeDef> defs;
    std::vector<std::string> pool = vertex_labels;
    for (std::size_t j = 0; j < edges; ++j) {
        std::uniform_int_distribution<std::size_t> size_dist(1, 4);
        std::size_t size = std::min(size_dist(rng), pool.size());
        std::vector<std::string> members;
        std::vector<std::size_t> picks(pool.size());
        for (std::size_t k = 0; k < picks.size(); ++k) picks[k] = k;
        std::shuffle(picks.begin(), picks.end(), rng);
        for (std::size_t k = 0; k < size; ++k) members.push_back(pool[picks[k]]);
        std::string label = "e" + std::to_string(j);
        defs.push_back({label, std::move(members)});
        pool.push_back(label);
    }
    return Ubergraph::build(std::move(vertex_labels), std::move(defs));
}

void bm_build(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(layered(n, 2 * n, 7));
}
BENCHMARK(bm_build)->Arg(16)->Arg(64)->Arg(256);

void bm_parse(benchmark::State& state) {
    std::string text = serialize(layered(static_cast<std::size_t>(state.range(0)),
                                         2 * static_cast<std::size_t>(state.range(0)), 7));
    for (auto _ : state) benchmark::DoNotOptimize(parse(text));
}
BENCHMARK(bm_parse)->Arg(16)->Arg(64)->Arg(256);

void bm_uber_levi(benchmark::State& state) {
    Ubergraph u = layered(static_cast<std::size_t>(state.range(0)),
                          2 * static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(uber_levi(u));
}
BENCHMARK(bm_uber_levi)->Arg(16)->Arg(64)->Arg(256);

void bm_spectral(benchmark::State& state) {
    Ubergraph u = layered(static_cast<std::size_t>(state.range(0)),
                          static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_report(u));
}
BENCHMARK(bm_spectral)->Arg(4)->Arg(8)->Arg(16);

void bm_iso_levi_route(benchmark::State& state) {
    Ubergraph u = layered(static_cast<std::size_t>(state.range(0)),
                          static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(u, u));
}
BENCHMARK(bm_iso_levi_route)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
