#include <benchmark/benchmark.h>

#include "plsec/mc.hpp"

using namespace plsec;

namespace {

mc::McConfig config(const benchmark::State& state, mc::ExecPolicy policy) {
    mc::McConfig c;
    c.trials = static_cast<std::uint64_t>(state.range(0));
    c.workers = static_cast<int>(state.range(1));
    c.policy = policy;
    return c;
}

SystemParams params() {
    SystemParams p;
    p.D = 100.0;
    p.r = 70.0;
    return p;
}

void sop(benchmark::State& state, mc::ExecPolicy policy, AttackMode mode) {
    const auto p = params();
    const auto c = config(state, policy);
    for (auto _ : state) {
        auto r = mc::mc_sop(p, mode, c);
        benchmark::DoNotOptimize(r.estimate);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void pdf(benchmark::State& state, mc::ExecPolicy policy) {
    const auto p = params();
    const auto c = config(state, policy);
    for (auto _ : state) {
        auto r = mc::mc_pdf(mc::Quantity::Log1pRatioJam, p, c);
        benchmark::DoNotOptimize(r.rmse);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_sop_eav_serial(benchmark::State& s) { sop(s, mc::ExecPolicy::Serial, AttackMode::Eavesdrop); }
void BM_sop_eav_parallel(benchmark::State& s) { sop(s, mc::ExecPolicy::Parallel, AttackMode::Eavesdrop); }
void BM_sop_jam_serial(benchmark::State& s) { sop(s, mc::ExecPolicy::Serial, AttackMode::Jam); }
void BM_sop_jam_parallel(benchmark::State& s) { sop(s, mc::ExecPolicy::Parallel, AttackMode::Jam); }
void BM_pdf_serial(benchmark::State& s) { pdf(s, mc::ExecPolicy::Serial); }
void BM_pdf_parallel(benchmark::State& s) { pdf(s, mc::ExecPolicy::Parallel); }

}  // namespace

#define SHARDS ->Args({200'000, 1})->Args({200'000, 4})->Args({200'000, 8})->UseRealTime()->Unit(benchmark::kMillisecond)

BENCHMARK(BM_sop_eav_serial) SHARDS;
BENCHMARK(BM_sop_eav_parallel) SHARDS;
BENCHMARK(BM_sop_jam_serial) SHARDS;
BENCHMARK(BM_sop_jam_parallel) SHARDS;
BENCHMARK(BM_pdf_serial) SHARDS;
BENCHMARK(BM_pdf_parallel) SHARDS;

BENCHMARK_MAIN();
