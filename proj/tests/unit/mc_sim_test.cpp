#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "thermoinfo/errors.hpp"
#include "thermoinfo/mc_sim.hpp"
#include "thermoinfo/quantities.hpp"

using namespace thermoinfo;
using namespace thermoinfo::mc;

namespace {

constexpr double kEps = 1e-20;

// eps / kT = ln 2 at this temperature, so a site is occupied with probability 1/3.
const double kTcold = kEps / (kBoltzmann * std::log(2.0));

bool same_ledger(const SimLedger& a, const SimLedger& b) {
    return a.seed == b.seed && a.p_initial == b.p_initial && a.p_final == b.p_final && a.flips_up == b.flips_up &&
           a.flips_down == b.flips_down && a.heat_to_cold == b.heat_to_cold &&
           a.total_entropy_change == b.total_entropy_change;
}

} // namespace

TEST_CASE("Configuration basics") {
    Configuration c = Configuration::from_string("0110010");
    CHECK(c.size() == 7);
    CHECK(c.ones() == 3);
    CHECK(c.to_string() == "0110010");
    c.flip(0);
    c.set(1, false);
    CHECK(c.to_string() == "1010010");
    const auto a = Configuration::from_string("01");
    const auto b = Configuration::from_string("10");
    CHECK((a < b) != (b < a));
    CHECK(Configuration::from_string("10") == b);
    CHECK_THROWS_AS(Configuration::from_string("012"), DomainError);

    Configuration wide(200);
    wide.set(199, true);
    wide.set(64, true);
    CHECK(wide.ones() == 2);
    CHECK(wide.test(199));
}

TEST_CASE("sample_equilibrium endpoints and determinism") {
    CHECK(sample_equilibrium(50, 0, 9).ones() == 0);
    CHECK(sample_equilibrium(50, 50, 9).ones() == 50);
    for (std::uint64_t p = 0; p <= 70; ++p) REQUIRE(sample_equilibrium(70, p, p * 31).ones() == p);
    CHECK(sample_equilibrium(1000, 300, 42) == sample_equilibrium(1000, 300, 42));
    CHECK_FALSE(sample_equilibrium(1000, 300, 42) == sample_equilibrium(1000, 300, 43));
    CHECK_THROWS_AS(sample_equilibrium(5, 6, 1), DomainError);
}

TEST_CASE("sample_equilibrium is uniform over the 15 configurations of L=6, p=2") {
    const auto all = enumerate_configurations(6, 2);
    REQUIRE(all.size() == 15);
    std::map<Configuration, int> bins;
    for (const auto& c : all) bins[c] = 0;

    const int draws = 100000;
    for (int seed = 0; seed < draws; ++seed) {
        const auto c = sample_equilibrium(6, 2, static_cast<std::uint64_t>(seed));
        REQUIRE(bins.count(c) == 1);
        ++bins[c];
    }
    const double expected = draws / 15.0;
    double chi2 = 0.0;
    for (const auto& [c, n] : bins) chi2 += (n - expected) * (n - expected) / expected;
    // 99th percentile of chi-squared with 14 degrees of freedom.
    CHECK(chi2 < 29.141);
    CHECK(oracle::chi2_upper_tail(chi2, 14.0) > 0.01);
}

TEST_CASE("sample_canonical") {
    CHECK(sample_canonical(1000, 1e-9, kEps, 1).ones() == 0);

    const auto big = sample_canonical(1'000'000, kTcold, kEps, 2026);
    const double mean = static_cast<double>(big.ones()) / 1e6;
    CHECK(mean >= 0.3323);
    CHECK(mean <= 0.3343);

    CHECK(sample_canonical(500, 800.0, kEps, 77) == sample_canonical(500, 800.0, kEps, 77));
    CHECK_THROWS_AS(sample_canonical(10, 0.0, kEps, 1), DomainError);
}

TEST_CASE("sample_canonical mean occupancy matches occupation_at") {
    for (double t : {300.0, 700.0, 2000.0, 1e5}) {
        const std::uint64_t length = 2000;
        const int runs = 200;
        std::vector<double> counts;
        for (int s = 0; s < runs; ++s) {
            counts.push_back(static_cast<double>(sample_canonical(length, t, kEps, 1000 + s).ones()));
        }
        const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / runs;
        double ss = 0.0;
        for (double x : counts) ss += (x - mean) * (x - mean);
        const double se = std::sqrt(ss / (runs - 1) / runs);
        const double expected = gas::occupation_at(length, t, kEps);
        CHECK(std::abs(mean - expected) <= 4 * std::max(se, 1e-12));
    }
}

TEST_CASE("h_function examples") {
    const auto uniform = ConfigDistribution::uniform(enumerate_configurations(6, 2));
    CHECK(h_function(uniform) == doctest::Approx(std::log(15.0)).epsilon(1e-15));
    CHECK(h_function(uniform) == doctest::Approx(gas::multiplicity_ln(6, 2)).epsilon(1e-15));

    const ConfigDistribution point({{Configuration::from_string("0101"), 1.0}});
    CHECK(h_function(point) == 0.0);

    const ConfigDistribution biased({{Configuration::from_string("01"), 0.9}, {Configuration::from_string("10"), 0.1}});
    CHECK(h_function(biased) == doctest::Approx(0.325082973391448227).epsilon(1e-14));
}

TEST_CASE("ConfigDistribution validation") {
    const auto a = Configuration::from_string("0011");
    const auto b = Configuration::from_string("0101");
    CHECK_THROWS_AS(ConfigDistribution({{a, 0.5}, {b, 0.4}}), InvalidDistributionError);
    CHECK_THROWS_AS(ConfigDistribution({{a, 1.2}, {b, -0.2}}), InvalidDistributionError);
    CHECK_THROWS_AS(ConfigDistribution({{a, 0.5}, {a, 0.5}}), InvalidDistributionError);
    CHECK_THROWS_AS(ConfigDistribution({}), InvalidDistributionError);
    CHECK_NOTHROW(ConfigDistribution({{a, 0.5}, {b, 0.5 + 5e-13}}));
}

TEST_CASE("h_function of the uniform ensemble equals ln C(L, p) for L <= 20") {
    for (std::uint64_t length = 1; length <= 20; ++length) {
        for (std::uint64_t p = 0; p <= length; ++p) {
            const auto dist = ConfigDistribution::uniform(enumerate_configurations(length, p));
            const double h = h_function(dist);
            const double expected = gas::multiplicity_ln(length, p);
            REQUIRE(std::abs(h - expected) <= 1e-12 * std::max(1.0, expected));
        }
    }
}

TEST_CASE("h_function never exceeds ln(support size)") {
    std::mt19937_64 gen(1234);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + gen() % 100;
        std::vector<std::uint64_t> codes(4096);
        std::iota(codes.begin(), codes.end(), 0);
        std::shuffle(codes.begin(), codes.end(), gen);

        std::vector<double> w(n);
        for (auto& x : w) x = u(gen) + 1e-3;
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        std::vector<ConfigDistribution::Entry> entries;
        for (std::size_t i = 0; i < n; ++i) {
            Configuration c(12);
            for (int b = 0; b < 12; ++b) c.set(b, (codes[i] >> b) & 1);
            entries.emplace_back(c, w[i] / total);
        }
        const double h = h_function(ConfigDistribution(entries));
        REQUIRE(h <= std::log(static_cast<double>(n)) + 1e-12);
        REQUIRE(h < std::log(static_cast<double>(n)) - 1e-12);
    }
}

TEST_CASE("simulate_transfer bookkeeping") {
    const TransferParams params{1000, 2 * kTcold, kTcold, kEps, 200000};
    const SimLedger l = simulate_transfer(params, 5);
    CHECK(l.energy_initial - l.energy_final == l.heat_to_cold);
    CHECK(static_cast<std::int64_t>(l.p_initial) - static_cast<std::int64_t>(l.p_final) ==
          static_cast<std::int64_t>(l.flips_down) - static_cast<std::int64_t>(l.flips_up));
    CHECK(l.entropy_cold_bath == l.heat_to_cold / kTcold);
    CHECK(l.entropy_gas_change ==
          kBoltzmann * (gas::multiplicity_ln(1000, l.p_final) - gas::multiplicity_ln(1000, l.p_initial)));
    CHECK(l.total_entropy_change == l.entropy_hot_bath + l.entropy_cold_bath + l.entropy_gas_change);
    REQUIRE(l.two_bath_ledger.has_value());
    CHECK(l.two_bath_ledger->p_hot == l.p_initial);
    CHECK(l.two_bath_ledger->p_cold == l.p_final);
}

TEST_CASE("energy is conserved exactly across many runs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const TransferParams params{97 + seed, 3 * kTcold, kTcold, kEps, 5000};
        const SimLedger l = simulate_transfer(params, seed);
        REQUIRE(l.energy_initial - l.energy_final == l.heat_to_cold);
    }
}

TEST_CASE("simulate_transfer determinism and degenerate inputs") {
    const TransferParams params{500, 2 * kTcold, kTcold, kEps, 50000};
    CHECK(same_ledger(simulate_transfer(params, 99), simulate_transfer(params, 99)));

    TransferParams none = params;
    none.steps = 0;
    const SimLedger idle = simulate_transfer(none, 99);
    CHECK(idle.p_final == idle.p_initial);
    CHECK(idle.heat_to_cold == 0.0);
    CHECK(idle.total_entropy_change == 0.0);
    CHECK(idle.p_initial == sample_canonical(500, 2 * kTcold, kEps, 99).ones());

    TransferParams reversed = params;
    reversed.t_hot = kTcold / 2;
    CHECK_THROWS_AS(simulate_transfer(reversed, 1), DomainError);
    TransferParams equal = params;
    equal.t_hot = equal.t_cold;
    CHECK_THROWS_AS(simulate_transfer(equal, 1), DomainError);
}

TEST_CASE("run_ensemble matches sequential runs in seed order") {
    const TransferParams params{300, 2 * kTcold, kTcold, kEps, 30000};
    std::vector<std::uint64_t> seeds{9, 3, 27, 1, 14, 8, 100};
    const auto parallel = run_ensemble(params, seeds, 4);
    REQUIRE(parallel.size() == seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        CHECK(same_ledger(parallel[i], simulate_transfer(params, seeds[i])));
    }
}

TEST_CASE("relaxation reaches the cold-bath equilibrium occupancy") {
    const TransferParams params{1000, 2 * kTcold, kTcold, kEps, 1'000'000};
    std::vector<std::uint64_t> seeds(60);
    std::iota(seeds.begin(), seeds.end(), 500);
    const auto runs = run_ensemble(params, seeds);
    const auto s = summarize(params, runs);
    CHECK(s.expected_p_final == doctest::Approx(1000.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(s.mean_p_final - s.expected_p_final) <= 4 * s.stderr_p_final);
}

TEST_CASE("near-equal bath temperatures produce no net entropy") {
    const TransferParams params{1000, kTcold / 0.999, kTcold, kEps, 100000};
    std::vector<std::uint64_t> seeds(100);
    std::iota(seeds.begin(), seeds.end(), 0);
    const auto s = summarize(params, run_ensemble(params, seeds));
    CHECK(std::abs(s.mean_total_entropy) < 3 * s.stderr_total_entropy);
}

TEST_CASE("second law holds statistically for every run") {
    for (double ratio : {1.2, 2.0, 5.0}) {
        const TransferParams params{1000, ratio * kTcold, kTcold, kEps, 100000};
        std::vector<std::uint64_t> seeds(100);
        std::iota(seeds.begin(), seeds.end(), 7000);
        const auto runs = run_ensemble(params, seeds);
        const auto s = summarize(params, runs);
        const double spread = s.stderr_total_entropy * std::sqrt(static_cast<double>(runs.size()));
        CHECK(s.mean_total_entropy > 0.0);
        for (const auto& r : runs) REQUIRE(r.total_entropy_change >= -4 * spread);
    }
}
