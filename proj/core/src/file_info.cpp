#include "thermoinfo/file_info.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "thermoinfo/errors.hpp"
#include "thermoinfo/lz77.hpp"

namespace thermoinfo::file {

namespace {

void require_data(Bytes data) {
    if (data.empty()) throw EmptyInputError();
}

void require_positive_energy(double bit_energy) {
    if (!(bit_energy > 0.0) || !std::isfinite(bit_energy)) {
        throw DomainError("bit energy must be finite and > 0");
    }
}

std::uint64_t popcount(Bytes data) {
    std::uint64_t ones = 0;
    for (const auto b : data) ones += static_cast<std::uint64_t>(std::popcount(b));
    return ones;
}

// -x ln x summed over the histogram, normalised by `total`.
template <typename Counts>
double histogram_entropy(const Counts& counts, double total) {
    double h = 0.0;
    for (const auto c : counts) {
        if (c == 0) continue;
        const double f = static_cast<double>(c) / total;
        h -= f * std::log(f);
    }
    return h;
}

// Calls fn(window) for each overlapping k-bit window, MSB first.
template <typename Fn>
void for_each_window(Bytes data, unsigned k, Fn&& fn) {
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    std::uint64_t window = 0;
    std::uint64_t seen = 0;
    for (const auto byte : data) {
        for (int bit = 7; bit >= 0; --bit) {
            window = ((window << 1) | ((byte >> bit) & 1u)) & mask;
            if (++seen >= k) fn(window);
        }
    }
}

} // namespace

Counts analyze_counts(Bytes data, double bit_energy) {
    require_data(data);
    require_positive_energy(bit_energy);
    Counts c;
    c.bit_length = 8 * static_cast<std::uint64_t>(data.size());
    c.ones = popcount(data);
    c.energy = static_cast<double>(c.ones) * bit_energy;
    return c;
}

double max_information(std::uint64_t bit_length) {
    if (bit_length == 0) throw EmptyInputError();
    return static_cast<double>(bit_length) * kLn2;
}

double file_temperature(double bit_energy) {
    require_positive_energy(bit_energy);
    return bit_energy / (2.0 * kBoltzmann * kLn2);
}

double shannon_entropy_order0(Bytes data) {
    require_data(data);
    const auto length = 8 * static_cast<std::uint64_t>(data.size());
    const auto ones = popcount(data);
    if (ones == 0 || ones == length) return 0.0;
    const double q = static_cast<double>(ones) / static_cast<double>(length);
    return -q * std::log(q) - (1.0 - q) * std::log1p(-q);
}

double block_entropy(Bytes data, unsigned block_bits) {
    require_data(data);
    if (block_bits < 1 || block_bits > kMaxBlockBits) {
        throw DomainError("block size k must lie in [1, " + std::to_string(kMaxBlockBits) + "]");
    }
    const auto length = 8 * static_cast<std::uint64_t>(data.size());
    const auto need = min_bits_for_block(block_bits);
    if (length < need) throw SampleSizeError(length, need, block_bits);

    const double windows = static_cast<double>(length - block_bits + 1);
    double h = 0.0;
    if (block_bits <= 20) {
        std::vector<std::uint64_t> counts(std::size_t{1} << block_bits, 0);
        for_each_window(data, block_bits, [&](std::uint64_t w) { ++counts[w]; });
        h = histogram_entropy(counts, windows);
    } else {
        std::unordered_map<std::uint64_t, std::uint64_t> counts;
        for_each_window(data, block_bits, [&](std::uint64_t w) { ++counts[w]; });
        std::vector<std::uint64_t> values;
        values.reserve(counts.size());
        for (const auto& [w, c] : counts) values.push_back(c);
        // Fixed summation order for reproducibility across hash layouts.
        std::sort(values.begin(), values.end());
        h = histogram_entropy(values, windows);
    }
    return h / static_cast<double>(block_bits);
}

double compression_information(Bytes data) {
    require_data(data);
    const auto coded = lz::compress(data);
    return static_cast<double>(8 * static_cast<std::uint64_t>(coded.size())) * kLn2;
}

Temperature effective_temperature(double energy, double info_nats) {
    if (!(energy >= 0.0) || !std::isfinite(energy)) throw DomainError("energy must be finite and >= 0");
    if (!(info_nats >= 0.0) || !std::isfinite(info_nats)) throw DomainError("information must be finite and >= 0");
    if (info_nats == 0.0) {
        if (energy == 0.0) throw UndefinedTemperatureError("temperature undefined: zero energy and zero information");
        return Temperature{std::numeric_limits<double>::infinity(), TemperatureRegime::infinite};
    }
    return Temperature{energy / (kBoltzmann * info_nats), TemperatureRegime::positive};
}

namespace {

double score_from(double compressed, double maximum) { return std::clamp(compressed / maximum, 0.0, 1.0); }

} // namespace

double equilibrium_score(Bytes data) {
    const double compressed = compression_information(data);
    return score_from(compressed, max_information(8 * static_cast<std::uint64_t>(data.size())));
}

FileReport analyze(Bytes data, double bit_energy, unsigned block_bits) {
    if (block_bits < 1 || block_bits > kMaxBlockBits) {
        throw DomainError("block size k must lie in [1, " + std::to_string(kMaxBlockBits) + "]");
    }
    const Counts counts = analyze_counts(data, bit_energy);
    const double length = static_cast<double>(counts.bit_length);

    FileReport r;
    r.bit_length = counts.bit_length;
    r.ones_count = counts.ones;
    r.bit_energy = bit_energy;
    r.energy = counts.energy;
    r.info_max = max_information(counts.bit_length);
    r.info_order0 = shannon_entropy_order0(data) * length;
    r.block_bits = block_bits;
    if (counts.bit_length >= min_bits_for_block(block_bits)) {
        r.info_block_k = block_entropy(data, block_bits) * length;
    }
    r.info_compression = compression_information(data);
    r.file_temperature = file_temperature(bit_energy);
    r.effective_temperature = effective_temperature(r.energy, r.info_compression);
    r.equilibrium_score = score_from(r.info_compression, r.info_max);
    return r;
}

} // namespace thermoinfo::file
