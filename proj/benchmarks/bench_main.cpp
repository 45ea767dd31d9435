#include <benchmark/benchmark.h>

#include <random>

#include "simplexmetrics/riemannian.hpp"
#include "simplexmetrics/simplex.hpp"

namespace sm = simplexmetrics;

namespace {

sm::RationalMatrix random_matrix(std::mt19937_64& gen, std::size_t n) {
    sm::RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = sm::Rational(static_cast<long>(gen() % 2001) - 1000,
                                      1 + static_cast<long>(gen() % 50));
    return m;
}

void BM_det_exact(benchmark::State& state) {
    std::mt19937_64 gen(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    sm::RationalMatrix m = random_matrix(gen, n);
    for (auto _ : state) benchmark::DoNotOptimize(sm::det_exact(m));
}
BENCHMARK(BM_det_exact)->Arg(3)->Arg(5)->Arg(8)->Arg(12);

void BM_vol2_comparison(benchmark::State& state) {
    std::mt19937_64 gen(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<sm::Rational>> pts(n + 1, std::vector<sm::Rational>(n));
    for (auto& p : pts)
        for (auto& c : p) c = sm::Rational(static_cast<long>(gen() % 19) - 9);
    sm::Simplex s(pts);
    for (auto _ : state) benchmark::DoNotOptimize(sm::verify_comparison(s));
}
BENCHMARK(BM_vol2_comparison)->Arg(3)->Arg(5);

void BM_context_build(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto s = sm::make_infinitesimal_simplex(n, n, true);
        benchmark::DoNotOptimize(s.context->quotient_dimension());
    }
}
BENCHMARK(BM_context_build)->Arg(1)->Arg(2);

void BM_reduce(benchmark::State& state) {
    auto s = sm::make_infinitesimal_simplex(2, 2, true);
    const sm::JetContext& ctx = *s.context;
    sm::Polynomial p(ctx.nvars());
    std::mt19937_64 gen(3);
    for (int t = 0; t < 30; ++t) {
        sm::Exponents e(ctx.nvars(), 0);
        for (auto& x : e) x = static_cast<std::uint8_t>(gen() % 3);
        p.add_term(e, sm::Rational(static_cast<long>(gen() % 9) - 4));
    }
    for (auto _ : state) benchmark::DoNotOptimize(ctx.reduce(p));
}
BENCHMARK(BM_reduce);

}  // namespace

BENCHMARK_MAIN();
