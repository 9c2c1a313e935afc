#include <benchmark/benchmark.h>

#include "dualcore/drezet.hpp"
#include "dualcore/exactla.hpp"
#include "dualcore/quiver.hpp"
#include "dualcore/rng.hpp"
#include "dualcore/sheafbridge.hpp"

using namespace dualcore;

namespace {

RMatrix seeded_matrix(std::uint64_t seed, std::size_t n, long bound) {
    Rng rng(seed);
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform_int(-bound, bound);
    return m;
}

void BM_det(benchmark::State& state) {
    const RMatrix m = seeded_matrix(1, static_cast<std::size_t>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(la::det(m));
}
BENCHMARK(BM_det)->Arg(4)->Arg(8)->Arg(16);

void BM_rank(benchmark::State& state) {
    const RMatrix m = seeded_matrix(2, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(la::rank(m));
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16)->Arg(32);

void BM_star(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const RMatrix g = seeded_matrix(3, n, 5);
    const RMatrix o = seeded_matrix(4, n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(la::star(g, o));
}
BENCHMARK(BM_star)->Arg(4)->Arg(8);

void BM_reflect(benchmark::State& state) {
    const long r = state.range(0);
    const quiver::Rep v = quiver::random_rep(3, quiver::DimVec{r, 2 * r}, 55, 3);
    for (auto _ : state) benchmark::DoNotOptimize(quiver::reflect(v));
}
BENCHMARK(BM_reflect)->Arg(2)->Arg(4)->Arg(8);

void BM_pairing_cell(benchmark::State& state) {
    const long r = state.range(0);
    Rng rng(77);
    quiver::Rep v = quiver::random_rep(3, quiver::DimVec{r, 2 * r}, rng.next_u64(), 2);
    while (la::rank(RMatrix::vstack(v.mats)) != static_cast<std::size_t>(r) ||
           la::rank(RMatrix::hstack(v.mats)) != static_cast<std::size_t>(2 * r))
        v = quiver::random_rep(3, quiver::DimVec{r, 2 * r}, rng.next_u64(), 2);
    const quiver::Rep w = quiver::random_rep(3, quiver::DimVec{r, r}, rng.next_u64(), 2);
    for (auto _ : state) benchmark::DoNotOptimize(la::det(quiver::C_matrix(v, w)));
}
BENCHMARK(BM_pairing_cell)->Arg(1)->Arg(2)->Arg(3);

void BM_eps_depth(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // Rebuild from scratch each iteration despite memoization by varying p.
        benchmark::DoNotOptimize(drezet::eps(drezet::Dyadic(1, q)));
    }
}
BENCHMARK(BM_eps_depth)->Arg(8)->Arg(16)->Arg(24);

void BM_hom_to_O(benchmark::State& state) {
    const long n = state.range(0);
    Rng rng(99);
    quiver::Rep v = quiver::random_rep(3, quiver::DimVec{n, n}, rng.next_u64(), 2);
    while (la::rank(RMatrix::vstack(v.mats)) != static_cast<std::size_t>(n))
        v = quiver::random_rep(3, quiver::DimVec{n, n}, rng.next_u64(), 2);
    const sheaf::BundleRep b = sheaf::bundle_from_rep(quiver::reflect(v));
    for (auto _ : state) benchmark::DoNotOptimize(sheaf::hom_to_O(b));
}
BENCHMARK(BM_hom_to_O)->Arg(1)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
