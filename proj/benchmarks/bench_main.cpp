#include "picard/cover.hpp"
#include "picard/langlands.hpp"
#include "picard/words.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace picard;

namespace {

GeneratorWord sample_word(std::size_t len, std::uint64_t seed) {
    static constexpr Gen four[4] = {Gen::T1, Gen::T2, Gen::M1, Gen::M2};
    std::mt19937_64 eng(seed);
    GeneratorWord w;
    for (std::size_t i = 0; i < len; ++i)
        w.push_back({four[eng() % 4], Int(eng() % 2 ? 1 : -1)});
    return w;
}

void BM_GaussIntMul(benchmark::State& state) {
    GaussInt a(123456789, -987654321), b(-192837465, 564738291);
    for (auto _ : state) {
        GaussInt c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_GaussIntMul);

void BM_MatrixWordEvaluation(benchmark::State& state) {
    GeneratorWord w = sample_word(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        Mat4z m = evaluate_word(w);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_MatrixWordEvaluation)->Arg(10)->Arg(30)->Arg(100);

void BM_ParameterWordEvaluation(benchmark::State& state) {
    GeneratorWord w = sample_word(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        StabParams p = evaluate_word_stabilizer(w);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ParameterWordEvaluation)->Arg(10)->Arg(30)->Arg(100);

void BM_StabWord(benchmark::State& state) {
    Mat4z p = evaluate_word(sample_word(30, 7));
    for (auto _ : state) {
        StabWord w = stab_word(p);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_StabWord);

void BM_LanglandsDecompose(benchmark::State& state) {
    GroupElement g{evaluate_word(sample_word(30, 7))};
    for (auto _ : state) {
        LanglandsParams params = decompose(g);
        benchmark::DoNotOptimize(params);
    }
}
BENCHMARK(BM_LanglandsDecompose);

void BM_RegionBound(benchmark::State& state) {
    auto pieces = sigma_pieces();
    SpinalSphere s0 = isometric_sphere(inversion(), "S0");
    for (auto _ : state) {
        Rat b = region_max_bound(pieces[1], s0);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_RegionBound);

void BM_FullCovering(benchmark::State& state) {
    auto pieces = sigma_pieces();
    auto spheres = covering_spheres();
    for (auto _ : state) {
        auto certs = verify_covering(pieces, spheres, 8);
        benchmark::DoNotOptimize(certs);
    }
}
BENCHMARK(BM_FullCovering);

} // namespace

BENCHMARK_MAIN();
