#include <benchmark/benchmark.h>

#include <random>

#include "signed_spectra/catalog.hpp"
#include "signed_spectra/families.hpp"
#include "signed_spectra/oracle.hpp"
#include "signed_spectra/spectral.hpp"
#include "signed_spectra/switching_iso.hpp"

namespace ss = signed_spectra;

namespace {

ss::SignedGraph random_graph(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<ss::SignedEdge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (const int c = pick(rng)) edges.push_back({u, v, c == 1 ? 1 : -1});
    return ss::SignedGraph::from_edges(n, edges);
}

void BM_CharPoly(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(ss::char_poly(g));
}
BENCHMARK(BM_CharPoly)->Arg(12)->Arg(24)->Arg(48)->Arg(96);

void BM_SwitchingIsoRandom(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto g = random_graph(n, 2);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (i * 7 + 3) % n;
    const auto h = ss::permute(ss::switch_at(g, ss::VertexSet{0, 1}), perm);
    for (auto _ : state) benchmark::DoNotOptimize(ss::is_switching_isomorphic(g, h));
}
BENCHMARK(BM_SwitchingIsoRandom)->Arg(11)->Arg(24)->Arg(64);

void BM_SwitchingIsoFriendship(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    const auto f = ss::construct_literal({ss::FamilyId::A20, {1, l}, false, 0});
    const auto a1 = ss::construct({ss::FamilyId::A1, {1, l}, true, 0});
    for (auto _ : state) benchmark::DoNotOptimize(ss::is_switching_isomorphic(f, a1));
}
BENCHMARK(BM_SwitchingIsoFriendship)->Arg(10)->Arg(50);

void BM_BuildCatalog(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ss::build_catalog(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildCatalog)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_OracleEnumeration(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ss::enumerate_switching_classes(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_OracleEnumeration)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
