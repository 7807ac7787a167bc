#include "thermoinfo/mc_sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <thread>

#include "thermoinfo/errors.hpp"
#include "thermoinfo/quantities.hpp"
#include "thermoinfo/rng.hpp"

namespace thermoinfo::mc {

namespace {

class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace

Configuration::Configuration(std::uint64_t length) : length_(length), words_((length + 63) / 64, 0) {}

Configuration Configuration::from_string(std::string_view bits) {
    Configuration c(bits.size());
    for (std::uint64_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            c.set(i, true);
        } else if (bits[i] != '0') {
            throw DomainError("configuration strings may only contain '0' and '1'");
        }
    }
    return c;
}

void Configuration::set(std::uint64_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

std::uint64_t Configuration::ones() const {
    std::uint64_t n = 0;
    for (const auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::string Configuration::to_string() const {
    std::string s(length_, '0');
    for (std::uint64_t i = 0; i < length_; ++i) {
        if (test(i)) s[i] = '1';
    }
    return s;
}

Configuration sample_equilibrium(std::uint64_t length, std::uint64_t ones, std::uint64_t seed) {
    if (ones > length) throw DomainError("sample_equilibrium: p must satisfy 0 <= p <= L");

    // Partial Fisher-Yates picks a uniform k-subset; place the minority value.
    const bool place_ones = ones <= length - ones;
    const std::uint64_t k = place_ones ? ones : length - ones;

    Configuration c(length);
    if (!place_ones) {
        for (std::uint64_t i = 0; i < length; ++i) c.set(i, true);
    }
    Rng rng(seed);
    std::vector<std::uint64_t> index(length);
    std::iota(index.begin(), index.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t j = i + rng.below(length - i);
        std::swap(index[i], index[j]);
        c.set(index[i], place_ones);
    }
    return c;
}

namespace {

Configuration draw_canonical(std::uint64_t length, double probability, Rng& rng) {
    Configuration c(length);
    for (std::uint64_t i = 0; i < length; ++i) {
        if (rng.uniform() < probability) c.set(i, true);
    }
    return c;
}

} // namespace

Configuration sample_canonical(std::uint64_t length, double temperature, double bit_energy, std::uint64_t seed) {
    if (length == 0) throw DomainError("sample_canonical: L must be >= 1");
    const double q = gas::site_occupation_probability(temperature, bit_energy);
    Rng rng(seed);
    return draw_canonical(length, q, rng);
}

ConfigDistribution::ConfigDistribution(std::vector<Entry> support) : support_(std::move(support)) {
    if (support_.empty()) throw InvalidDistributionError("distribution support is empty");

    NeumaierSum total;
    for (const auto& [config, prob] : support_) {
        if (!(prob >= 0.0) || !std::isfinite(prob)) {
            throw InvalidDistributionError("probabilities must be finite and non-negative");
        }
        total.add(prob);
    }
    if (std::abs(total.value() - 1.0) > kProbabilityTolerance) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", total.value());
        throw InvalidDistributionError(std::string("probabilities sum to ") + buf + ", not 1");
    }

    std::vector<const Configuration*> sorted;
    sorted.reserve(support_.size());
    for (const auto& entry : support_) sorted.push_back(&entry.first);
    std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) { return *a < *b; });
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end(),
                                        [](const auto* a, const auto* b) { return *a == *b; });
    if (dup != sorted.end()) throw InvalidDistributionError("support configurations must be distinct");
}

ConfigDistribution ConfigDistribution::uniform(std::vector<Configuration> support) {
    const double p = 1.0 / static_cast<double>(support.size());
    std::vector<Entry> entries;
    entries.reserve(support.size());
    for (auto& c : support) entries.emplace_back(std::move(c), p);
    return ConfigDistribution(std::move(entries));
}

double h_function(const ConfigDistribution& dist) {
    // Compensated: a uniform distribution over n states must give ln n to
    // within a few ulps even for large n.
    NeumaierSum sum;
    for (const auto& [config, prob] : dist.support()) {
        if (prob > 0.0) sum.add(-prob * std::log(prob));
    }
    return sum.value();
}

std::vector<Configuration> enumerate_configurations(std::uint64_t length, std::uint64_t ones) {
    if (ones > length) throw DomainError("enumerate_configurations: p must satisfy 0 <= p <= L");
    if (length > 30) throw DomainError("enumerate_configurations: L > 30 is too large to enumerate");

    std::string bits(length, '0');
    std::fill(bits.end() - static_cast<std::ptrdiff_t>(ones), bits.end(), '1');
    std::vector<Configuration> out;
    do {
        out.push_back(Configuration::from_string(bits));
    } while (std::next_permutation(bits.begin(), bits.end()));
    return out;
}

void TransferParams::validate() const {
    if (length == 0) throw DomainError("simulate_transfer: L must be >= 1");
    if (!(bit_energy > 0.0) || !std::isfinite(bit_energy)) throw DomainError("bit energy must be finite and > 0");
    if (!(t_cold > 0.0) || !std::isfinite(t_hot)) throw DomainError("temperatures must be finite and > 0");
    if (!(t_hot > t_cold)) throw DomainError("simulate_transfer requires T_hot > T_cold");
}

SimLedger simulate_transfer(const TransferParams& params, std::uint64_t seed) {
    params.validate();
    const std::uint64_t length = params.length;
    const double eps = params.bit_energy;

    Rng rng(seed);
    Configuration gas_state =
        draw_canonical(length, gas::site_occupation_probability(params.t_hot, eps), rng);
    const std::uint64_t p_initial = gas_state.ones();

    const double accept_up = std::exp(-eps / (kBoltzmann * params.t_cold));
    std::uint64_t up = 0;
    std::uint64_t down = 0;
    for (std::uint64_t step = 0; step < params.steps; ++step) {
        const std::uint64_t site = rng.below(length);
        if (gas_state.test(site)) {
            gas_state.flip(site);
            ++down;
        } else if (rng.uniform() < accept_up) {
            gas_state.flip(site);
            ++up;
        }
    }

    SimLedger ledger;
    ledger.seed = seed;
    ledger.steps = params.steps;
    ledger.length = length;
    ledger.p_initial = p_initial;
    ledger.p_final = p_initial + up - down;
    ledger.flips_up = up;
    ledger.flips_down = down;
    ledger.energy_initial = static_cast<double>(p_initial) * eps;
    ledger.energy_final = static_cast<double>(ledger.p_final) * eps;
    // p_final was obtained from the integer flip balance, so this difference
    // is exactly the energy carried by the net down flips.
    ledger.heat_to_cold = ledger.energy_initial - ledger.energy_final;

    ledger.entropy_hot_bath = 0.0;
    ledger.entropy_cold_bath = ledger.heat_to_cold / params.t_cold;
    ledger.entropy_gas_change =
        kBoltzmann * (gas::multiplicity_ln(length, ledger.p_final) - gas::multiplicity_ln(length, p_initial));
    ledger.total_entropy_change = ledger.entropy_hot_bath + ledger.entropy_cold_bath + ledger.entropy_gas_change;

    const auto interior = [length](std::uint64_t p) { return p > 0 && p < length; };
    if (interior(p_initial) && interior(ledger.p_final)) {
        ledger.two_bath_ledger = gas::transfer_entropy_delta(length, p_initial, ledger.p_final, eps);
    }
    return ledger;
}

std::vector<SimLedger> run_ensemble(const TransferParams& params, std::span<const std::uint64_t> seeds,
                                    unsigned threads) {
    params.validate();
    std::vector<SimLedger> results(seeds.size());
    if (seeds.empty()) return results;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, seeds.size()));

    // Strided assignment; each slot is written by exactly one worker.
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < seeds.size(); i += threads) {
                results[i] = simulate_transfer(params, seeds[i]);
            }
        });
    }
    workers.clear();
    return results;
}

namespace {

std::pair<double, double> mean_and_stderr(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (const double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

} // namespace

EnsembleSummary summarize(const TransferParams& params, std::span<const SimLedger> runs) {
    if (runs.empty()) throw DomainError("cannot summarise an empty ensemble");
    std::vector<double> total;
    std::vector<double> p_final;
    std::vector<double> heat;
    for (const auto& r : runs) {
        total.push_back(r.total_entropy_change);
        p_final.push_back(static_cast<double>(r.p_final));
        heat.push_back(r.heat_to_cold);
    }
    EnsembleSummary s;
    s.runs = runs.size();
    std::tie(s.mean_total_entropy, s.stderr_total_entropy) = mean_and_stderr(total);
    std::tie(s.mean_p_final, s.stderr_p_final) = mean_and_stderr(p_final);
    s.mean_heat_to_cold = mean_and_stderr(heat).first;
    s.expected_p_final = gas::occupation_at(params.length, params.t_cold, params.bit_energy);
    return s;
}

} // namespace thermoinfo::mc
