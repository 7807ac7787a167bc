#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "thermoinfo/file_info.hpp"
#include "thermoinfo/lz77.hpp"
#include "thermoinfo/mc_sim.hpp"
#include "thermoinfo/rng.hpp"
#include "thermoinfo/twolevel_gas.hpp"

using namespace thermoinfo;

namespace {

std::vector<std::uint8_t> random_bytes(std::size_t n) {
    Rng rng(1);
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng.next());
    return v;
}

std::vector<std::uint8_t> text_like(std::size_t n) {
    Rng rng(2);
    static const char* words[] = {"entropy ", "bit ", "energy ", "temperature ", "gas ", "the ", "of ", "file "};
    std::vector<std::uint8_t> v;
    v.reserve(n);
    while (v.size() < n) {
        for (const char* c = words[rng.below(8)]; *c && v.size() < n; ++c) v.push_back(static_cast<std::uint8_t>(*c));
    }
    return v;
}

void BM_CompressRandom(benchmark::State& state) {
    const auto data = random_bytes(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lz::compress(data));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CompressRandom)->Arg(1 << 16)->Arg(1 << 20);

void BM_CompressText(benchmark::State& state) {
    const auto data = text_like(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lz::compress(data));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CompressText)->Arg(1 << 16)->Arg(1 << 20);

void BM_Decompress(benchmark::State& state) {
    const auto packed = lz::compress(text_like(1 << 20));
    for (auto _ : state) benchmark::DoNotOptimize(lz::decompress(packed));
    state.SetBytesProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_Decompress);

void BM_BlockEntropy(benchmark::State& state) {
    const auto data = random_bytes(1 << 20);
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(file::block_entropy(data, k));
    state.SetBytesProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_BlockEntropy)->Arg(1)->Arg(8)->Arg(16)->Arg(19);

void BM_MultiplicityLn(benchmark::State& state) {
    const auto length = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t p = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gas::multiplicity_ln(length, p));
        p = (p + 7919) % (length + 1);
    }
}
BENCHMARK(BM_MultiplicityLn)->Arg(1000)->Arg(1'000'000);

void BM_SimulateTransfer(benchmark::State& state) {
    const double eps = 1e-20;
    const double t_cold = eps / (1.380649e-23 * 0.6931471805599453);
    const mc::TransferParams params{1000, 2 * t_cold, t_cold, eps, static_cast<std::uint64_t>(state.range(0))};
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(mc::simulate_transfer(params, seed++));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateTransfer)->Arg(100'000)->Arg(1'000'000);

} // namespace

BENCHMARK_MAIN();
