#pragma once

// A binary file viewed as a frozen two-level gas: each set bit is a "one"
// carrying energy epsilon. Bits are read most-significant first.

#include <cstdint>
#include <optional>
#include <span>

#include "thermoinfo/quantities.hpp"

namespace thermoinfo::file {

using Bytes = std::span<const std::uint8_t>;

struct Counts {
    std::uint64_t bit_length = 0;  // L
    std::uint64_t ones = 0;        // p
    double energy = 0.0;           // Q = p * eps [J]
};

Counts analyze_counts(Bytes data, double bit_energy);

/// L ln 2 nats.
double max_information(std::uint64_t bit_length);

/// eps / (2 k ln 2): temperature of a random file, independent of L and p.
double file_temperature(double bit_energy);

/// Binary entropy of the empirical one-fraction, nats per bit.
double shannon_entropy_order0(Bytes data);

inline constexpr unsigned kMaxBlockBits = 24;

/// Smallest bit length for which a k-bit block entropy is reported.
constexpr std::uint64_t min_bits_for_block(unsigned block_bits) { return 10 * (std::uint64_t{1} << block_bits); }

/// Entropy of overlapping k-bit windows divided by k, nats per bit.
/// Throws SampleSizeError when L < 10 * 2^k.
double block_entropy(Bytes data, unsigned block_bits);

/// Size of the frozen sliding-window coding of `data`, in nats
/// (compressed bits * ln 2). An upper bound on the information content.
double compression_information(Bytes data);

/// Q / (k * I). I = 0 with Q > 0 yields the infinite sentinel; both zero
/// throws UndefinedTemperatureError.
Temperature effective_temperature(double energy, double info_nats);

inline constexpr double kEquilibriumThreshold = 0.95;

/// compression_information / max_information clamped to [0, 1].
double equilibrium_score(Bytes data);

struct FileReport {
    std::uint64_t bit_length = 0;
    std::uint64_t ones_count = 0;
    double bit_energy = 0.0;              // J
    double energy = 0.0;                  // J
    double info_max = 0.0;                // nats
    double info_order0 = 0.0;             // nats, whole file
    std::optional<double> info_block_k;   // nats, whole file; empty if the file is too short
    unsigned block_bits = 8;
    double info_compression = 0.0;        // nats
    double file_temperature = 0.0;        // K
    Temperature effective_temperature;    // K, from energy and info_compression
    double equilibrium_score = 0.0;

    [[nodiscard]] bool in_equilibrium() const { return equilibrium_score >= kEquilibriumThreshold; }
};

FileReport analyze(Bytes data, double bit_energy, unsigned block_bits = 8);

} // namespace thermoinfo::file
