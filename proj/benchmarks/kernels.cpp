#include <benchmark/benchmark.h>

#include "fusionforge/bounds.hpp"
#include "fusionforge/fusion_ring.hpp"
#include "fusionforge/modular_data.hpp"
#include "fusionforge/poly.hpp"
#include "fusionforge/quantum_group.hpp"

using namespace fusionforge;

namespace {

void cyclotomic_product(benchmark::State& state) {
    const u64 n = static_cast<u64>(state.range(0));
    CycElem a = root_of_unity(n, 1) + root_of_unity(n, 3) + CycElem(2);
    CycElem b = root_of_unity(n, 5) - root_of_unity(n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(cyclotomic_product)->Arg(16)->Arg(105)->Arg(840);

void cyclotomic_inverse(benchmark::State& state) {
    const u64 n = static_cast<u64>(state.range(0));
    CycElem a = root_of_unity(n, 1) + root_of_unity(n, 3) + CycElem(2);
    for (auto _ : state) benchmark::DoNotOptimize(inv(a));
}
BENCHMARK(cyclotomic_inverse)->Arg(16)->Arg(105);

void fusion_charpoly(benchmark::State& state) {
    FusionRing r = product_ring(product_ring(fibonacci_ring(), ising_ring()), fibonacci_ring());
    ZMatrix m = fusion_matrix(r, r.rank() - 1);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(fusion_charpoly);

void ring_embedding(benchmark::State& state) {
    FusionRing r = product_ring(fibonacci_ring(), ising_ring());
    for (auto _ : state) benchmark::DoNotOptimize(attach_cyclotomic_embedding(r, 2000, ConductorMode::search_bound));
}
BENCHMARK(ring_embedding);

void a1_dimension_fields(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dimension_fields(make_category('A', 1, k)));
}
BENCHMARK(a1_dimension_fields)->Arg(6)->Arg(40)->Arg(150);

void rank_two_dimension_fields(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dimension_fields(make_category('G', 2, k)));
}
BENCHMARK(rank_two_dimension_fields)->Arg(4)->Arg(12);

void kac_s_matrix(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    CategoryHandle c = make_category('A', 2, k);
    for (auto _ : state) benchmark::DoNotOptimize(s_matrix(c));
}
BENCHMARK(kac_s_matrix)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void f_bound_wide(benchmark::State& state) {
    const u64 n = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f_bound(n));
}
BENCHMARK(f_bound_wide)->Arg(24)->Arg(5040);

}  // namespace

BENCHMARK_MAIN();
