#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "sixstate/bell.hpp"
#include "sixstate/codes.hpp"
#include "sixstate/keyrate.hpp"
#include "sixstate/protocol.hpp"
#include "sixstate/rng.hpp"

using namespace sixstate;

namespace {

void bm_entropy4(benchmark::State& state) {
    const bell_diagonal s = from_bit_error_depolarizing(0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(entropy4(s));
    }
}
BENCHMARK(bm_entropy4);

void bm_cat_hash_rate(benchmark::State& state) {
    const cat_hash_config cfg(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cat_hash_rate(0.1, cfg));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_cat_hash_rate)->DenseRange(2, 12, 2);

void bm_threshold_solve(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(threshold([](double p) { return six_state_hashing_rate(p); }, 0.05, 0.2, 1e-6));
    }
}
BENCHMARK(bm_threshold_solve);

void bm_best_cat_threshold(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(best_cat_threshold(2, 7, 1e-6));
    }
}
BENCHMARK(bm_best_cat_threshold);

void bm_syndrome_decode(benchmark::State& state) {
    const css_pair pair = css_pair::steane_preset();
    random_stream rng(1);
    std::vector<bit_vec> words;
    for (int i = 0; i < 256; ++i) {
        bit_vec w(7);
        for (std::size_t j = 0; j < 7; ++j) w.set(j, rng.next_bit());
        words.push_back(std::move(w));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pair.code().bounded_distance_decode(words[i & 255]));
        ++i;
    }
}
BENCHMARK(bm_syndrome_decode);

void bm_ml_hash_decode(benchmark::State& state) {
    random_stream rng(7);
    bit_vec pattern(16);
    for (std::size_t i = 0; i < 16; ++i) pattern.set(i, rng.bernoulli(0.125));
    const parity_hash h = random_parity_hash(pattern, 13, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ml_hash_decode(h.rows, h.parities, 0.125, 16));
    }
}
BENCHMARK(bm_ml_hash_decode);

void bm_protocol_run(benchmark::State& state) {
    protocol_config cfg;
    cfg.which_scheme = scheme::six_state;
    cfg.n_pulses = static_cast<std::uint64_t>(state.range(0));
    cfg.channel = {channel_config::kind::depolarizing, 0.05};
    cfg.e_max_rate = 0.15;
    cfg.rng_seed = 42;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_protocol_run)->Arg(50000);

}  // namespace

BENCHMARK_MAIN();
