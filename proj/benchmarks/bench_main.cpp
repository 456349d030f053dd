#include <benchmark/benchmark.h>

#include <random>

#include "hkannuli/classify.hpp"

using namespace hka;

namespace {

Word random_word(std::mt19937_64& rng, int len) {
    std::vector<Block> b;
    for (int i = 0; i < len; ++i) {
        Gen g = std::uniform_int_distribution<int>(0, 1)(rng) ? Gen::U : Gen::V;
        b.push_back({g, std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
    }
    return Word::reduce(b);
}

void BM_Whitehead(benchmark::State& st) {
    std::mt19937_64 rng(1);
    std::vector<Word> ws;
    for (int i = 0; i < 64; ++i) ws.push_back(random_word(rng, static_cast<int>(st.range(0))));
    std::size_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(whitehead_minimal_length(ws[i++ % ws.size()]));
}
BENCHMARK(BM_Whitehead)->Arg(16)->Arg(64)->Arg(256);

void BM_PrimitiveImage(benchmark::State& st) {
    // image of u under a long product of Nielsen moves stays primitive
    Word a = Word::u(), b = Word::v();
    for (int i = 0; i < st.range(0); ++i) {
        a = a * b;
        std::swap(a, b);
    }
    for (auto _ : st) benchmark::DoNotOptimize(is_primitive(a));
}
BENCHMARK(BM_PrimitiveImage)->Arg(10)->Arg(20);

void BM_BoundaryWord(benchmark::State& st) {
    TypeKParams k{3, 2, 1, 7, st.range(0), 4, -3};
    std::int64_t n = 0;
    for (auto _ : st) benchmark::DoNotOptimize(boundary_word(k, n++ % 50));
}
BENCHMARK(BM_BoundaryWord)->Arg(1)->Arg(5)->Arg(25);

void BM_Census(benchmark::State& st) {
    TypeKParams k{3, 2, 1, 7, 5, 4, -3};
    for (auto _ : st) benchmark::DoNotOptimize(typeK_census(k, st.range(0)));
}
BENCHMARK(BM_Census)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
