#include "k3m/discform.hpp"
#include "k3m/embed.hpp"
#include "k3m/lattice.hpp"
#include "k3m/mat.hpp"

#include <benchmark/benchmark.h>

using namespace k3m;

namespace {

// small diagonal mixed by unimodular shears: dense input, tame pivots
MatZ dense_example(std::size_t n) {
    MatZ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Int(static_cast<long>(2 * i + 1));
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) += m.at(i + 1, j);
                m.at(j, i + 1) -= m.at(j, i);
            }
    return m;
}

void bench_snf(benchmark::State& state) {
    MatZ m = dense_example(std::size_t(state.range(0)));
    for (auto _ : state) {
        SnfResult r = snf(m);
        benchmark::DoNotOptimize(r.d);
    }
}

void bench_snf_k3_gram(benchmark::State& state) {
    MatZ g = lat::k3().gram();
    for (auto _ : state) {
        SnfResult r = snf(g);
        benchmark::DoNotOptimize(r.d);
    }
}

void bench_discriminant_form(benchmark::State& state) {
    Lattice l = direct_sum(rescale(lat::E(8), Int(2)), lat::U_scaled(Int(2)));
    for (auto _ : state) {
        FiniteQuadraticForm a = discriminant_form(l);
        benchmark::DoNotOptimize(a.group_order());
    }
}

void bench_form_isomorphy(benchmark::State& state) {
    Lattice l = direct_sum(rescale(lat::E(8), Int(2)), lat::U_scaled(Int(2)));
    FiniteQuadraticForm a = discriminant_form(l);
    FiniteQuadraticForm b = fqf_negate(a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(are_isomorphic(a, b));
    }
}

void bench_root_count(benchmark::State& state) {
    Lattice e8 = lat::E(8);
    for (auto _ : state) {
        RootCount r = root_count(e8);
        benchmark::DoNotOptimize(r.count);
    }
}

void bench_orthogonal_complement(benchmark::State& state) {
    Lattice k = lat::k3();
    MatZ col(22, 1);
    col.at(4, 0) = 1;
    col.at(5, 0) = 3;
    for (auto _ : state) {
        ComplementResult c = orthogonal_complement({k, col});
        benchmark::DoNotOptimize(c.lattice);
    }
}

}  // namespace

BENCHMARK(bench_snf)->Arg(6)->Arg(10)->Arg(12);
BENCHMARK(bench_snf_k3_gram);
BENCHMARK(bench_discriminant_form);
BENCHMARK(bench_form_isomorphy);
BENCHMARK(bench_root_count);
BENCHMARK(bench_orthogonal_complement);

BENCHMARK_MAIN();
