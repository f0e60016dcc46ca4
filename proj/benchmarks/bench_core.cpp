#include <benchmark/benchmark.h>

#include "adjhopf/deformation.hpp"
#include "adjhopf/groupoid.hpp"

using namespace adjhopf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

void BM_superline_h2(benchmark::State& state) {
    auto h = superline(Q);
    for (auto _ : state) {
        auto rep = cohomology(h, 2);
        benchmark::DoNotOptimize(rep.dim_h);
    }
}
BENCHMARK(BM_superline_h2);

void BM_ks3_z2_f3(benchmark::State& state) {
    auto h = group_algebra(FiniteGroup::symmetric(3), FieldSpec::prime_field(3));
    for (auto _ : state) {
        auto rep = cohomology(h, 2);
        benchmark::DoNotOptimize(rep.dim_z);
    }
}
BENCHMARK(BM_ks3_z2_f3);

void BM_rmatrix_ks3(benchmark::State& state) {
    auto h = group_algebra(FiniteGroup::symmetric(3), Q);
    for (auto _ : state) {
        auto r = r_matrix(h);
        benchmark::DoNotOptimize(r.matrix().nnz());
    }
}
BENCHMARK(BM_rmatrix_ks3);

void BM_ybe_ks3(benchmark::State& state) {
    auto h = group_algebra(FiniteGroup::symmetric(3), Q);
    auto r = r_matrix(h);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_ybe(r));
    }
}
BENCHMARK(BM_ybe_ks3);

void BM_charpoly_superline(benchmark::State& state) {
    auto r = r_matrix(superline(Q));
    for (auto _ : state) {
        auto p = char_poly(r);
        benchmark::DoNotOptimize(p.size());
    }
}
BENCHMARK(BM_charpoly_superline);

void BM_groupoid_s3(benchmark::State& state) {
    auto gpd = conjugate_groupoid(FiniteGroup::symmetric(3));
    const FieldSpec f = FieldSpec::prime_field(state.range(0) == 0 ? 5 : 3);
    for (auto _ : state) {
        auto basis = groupoid_cocycle_space(gpd, 2, f);
        benchmark::DoNotOptimize(basis.dim());
    }
}
BENCHMARK(BM_groupoid_s3)->Arg(0)->Arg(1);

void BM_deformed_ybe_superline(benchmark::State& state) {
    auto h = superline(Q);
    auto rep = cohomology(h, 2, {.with_basis = true});
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_deformed_ybe(h, rep.basis[0]));
    }
}
BENCHMARK(BM_deformed_ybe_superline);

void BM_d3d2_column_ks3_f3(benchmark::State& state) {
    auto h = group_algebra(FiniteGroup::symmetric(3), FieldSpec::prime_field(3));
    Differentials diff(h);
    uint32_t coord = 0;
    for (auto _ : state) {
        Cochain phi{2, {LinearMap::from_vec(h.field(), 6, 2, 1,
                                            sv_unit(coord, Scalar::one(h.field())))}};
        benchmark::DoNotOptimize(diff.d3(diff.d2(phi)).is_zero());
        coord = (coord + 1) % 216;
    }
}
BENCHMARK(BM_d3d2_column_ks3_f3);

} // namespace

BENCHMARK_MAIN();
