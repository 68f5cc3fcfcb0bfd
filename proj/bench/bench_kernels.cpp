// Serial versus OpenMP kernels: sparse multiplication and the sampled
// verification campaign.

#include <benchmark/benchmark.h>

#include <random>

#include "rdu/campaign.hpp"
#include "rdu/decompose.hpp"
#include "rdu/parse.hpp"
#include "rdu/polynomial.hpp"

namespace {

rdu::Polynomial dense_random(std::mt19937_64& rng, const rdu::ContextPtr& ctx, int terms, unsigned deg) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<unsigned> exp(0, deg);
    std::vector<rdu::Term> ts;
    for (int t = 0; t < terms; ++t) {
        rdu::Exponents e(ctx->size(), 0);
        for (auto& x : e)
            x = exp(rng);
        ts.push_back({std::move(e), rdu::Rational(coef(rng))});
    }
    return rdu::Polynomial(ctx, std::move(ts));
}

struct MulInputs {
    rdu::Polynomial a, b;
};

MulInputs mul_inputs(int terms) {
    std::mt19937_64 rng(1);
    auto ctx = rdu::make_context({"u1", "u2"}, {"x1", "x2", "x3"});
    return {dense_random(rng, ctx, terms, 6), dense_random(rng, ctx, terms, 6)};
}

void BM_MultiplySerial(benchmark::State& state) {
    const auto in = mul_inputs(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rdu::multiply_serial(in.a, in.b));
}

void BM_MultiplyParallel(benchmark::State& state) {
    const auto in = mul_inputs(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rdu::multiply_parallel(in.a, in.b));
}

struct CampaignInputs {
    std::vector<rdu::Polynomial> system;
    rdu::Decomposition d;
};

CampaignInputs campaign_inputs() {
    auto ctx = rdu::make_context({"u1", "u2"}, {"x1", "x2"});
    std::vector<rdu::Polynomial> sys{rdu::parse_polynomial("u1*x2^2 + x1^2", ctx),
                                     rdu::parse_polynomial("u2*x2^2 + u1*x1*x2 + x2", ctx)};
    auto d = rdu::rdu_for_zd(sys);
    return {std::move(sys), std::move(d)};
}

void BM_CampaignSerial(benchmark::State& state) {
    const auto in = campaign_inputs();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rdu::verify_decomposition_serial(in.system, in.d, static_cast<std::size_t>(state.range(0)), 0));
}

void BM_CampaignParallel(benchmark::State& state) {
    const auto in = campaign_inputs();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            rdu::verify_decomposition(in.system, in.d, static_cast<std::size_t>(state.range(0)), 0));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
