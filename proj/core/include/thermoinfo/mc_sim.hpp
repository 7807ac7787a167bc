#pragma once

// Microstate sampling and a seed-reproducible hot-to-cold transfer
// simulation for the two-level gas.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thermoinfo/twolevel_gas.hpp"

namespace thermoinfo::mc {

/// One microstate of an L-site gas: a fixed-length bit string.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::uint64_t length);

    /// Parses a string of '0'/'1' characters.
    static Configuration from_string(std::string_view bits);

    [[nodiscard]] std::uint64_t size() const { return length_; }
    [[nodiscard]] bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint64_t i, bool value);
    void flip(std::uint64_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// O(L) popcount.
    [[nodiscard]] std::uint64_t ones() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

private:
    std::uint64_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Uniform draw from the C(L, p) configurations with exactly p ones.
Configuration sample_equilibrium(std::uint64_t length, std::uint64_t ones, std::uint64_t seed);

/// Each site independently occupied with probability 1 / (1 + exp(eps / kT)).
Configuration sample_canonical(std::uint64_t length, double temperature, double bit_energy, std::uint64_t seed);

inline constexpr double kProbabilityTolerance = 1e-12;

/// A probability distribution over distinct configurations.
class ConfigDistribution {
public:
    using Entry = std::pair<Configuration, double>;

    /// Throws InvalidDistributionError on negative probabilities, duplicate
    /// configurations, or a total further than 1e-12 from one.
    explicit ConfigDistribution(std::vector<Entry> support);

    static ConfigDistribution uniform(std::vector<Configuration> support);

    [[nodiscard]] std::span<const Entry> support() const { return support_; }
    [[nodiscard]] std::size_t size() const { return support_.size(); }

private:
    std::vector<Entry> support_;
};

/// -sum P ln P in nats; ln(size) exactly when uniform.
double h_function(const ConfigDistribution& dist);

/// All C(L, p) configurations in lexicographic order of their bit strings.
std::vector<Configuration> enumerate_configurations(std::uint64_t length, std::uint64_t ones);

struct TransferParams {
    std::uint64_t length = 1000;
    double t_hot = 0.0;        // K
    double t_cold = 0.0;       // K
    double bit_energy = 0.0;   // J
    std::uint64_t steps = 0;   // single-site Metropolis attempts

    void validate() const;
};

struct SimLedger {
    std::uint64_t seed = 0;
    std::uint64_t steps = 0;
    std::uint64_t length = 0;
    std::uint64_t p_initial = 0;
    std::uint64_t p_final = 0;
    std::uint64_t flips_up = 0;
    std::uint64_t flips_down = 0;
    double energy_initial = 0.0;       // J
    double energy_final = 0.0;         // J
    double heat_to_cold = 0.0;         // J, energy of the net down flips
    double entropy_hot_bath = 0.0;     // J/K
    double entropy_cold_bath = 0.0;    // J/K, heat_to_cold / T_cold
    double entropy_gas_change = 0.0;   // J/K, k [ln C(L, p_f) - ln C(L, p_i)]
    double total_entropy_change = 0.0; // J/K
    /// The dQ = p_hot * eps ledger evaluated at (p_initial, p_final), when
    /// both occupations are interior.
    std::optional<gas::TransferLedger> two_bath_ledger;
};

/// Prepares the gas with sample_canonical at T_hot, then relaxes it with
/// single-site Metropolis at T_cold: a 0 -> 1 flip is accepted with
/// probability exp(-eps / k T_cold), a 1 -> 0 flip always.
///
/// The ledger is energy conserving. The gas leaves the hot bath carrying its
/// equilibrium state, so the hot bath's entropy is unchanged during the
/// transfer (entropy_hot_bath = 0); only heat actually dumped is credited to
/// the cold bath.
SimLedger simulate_transfer(const TransferParams& params, std::uint64_t seed);

/// Runs one simulation per seed on up to `threads` workers (0 = hardware
/// concurrency). Results are returned in the order of `seeds`.
std::vector<SimLedger> run_ensemble(const TransferParams& params, std::span<const std::uint64_t> seeds,
                                    unsigned threads = 0);

struct EnsembleSummary {
    std::size_t runs = 0;
    double mean_total_entropy = 0.0;   // J/K
    double stderr_total_entropy = 0.0; // J/K
    double mean_p_final = 0.0;
    double stderr_p_final = 0.0;
    double mean_heat_to_cold = 0.0;    // J
    double expected_p_final = 0.0;     // occupation_at(L, T_cold, eps)
};

EnsembleSummary summarize(const TransferParams& params, std::span<const SimLedger> runs);

} // namespace thermoinfo::mc
