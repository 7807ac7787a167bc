#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "thermoinfo/errors.hpp"
#include "thermoinfo/lz77.hpp"

using namespace thermoinfo;

namespace {

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(gen() & 0xFF);
    return out;
}

} // namespace

TEST_CASE("empty input codes to an empty stream") {
    CHECK(lz::compress({}).empty());
    CHECK(lz::decompress({}).empty());
}

TEST_CASE("decompress inverts compress on varied inputs") {
    std::mt19937_64 gen(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = gen() % 5000;
        std::vector<std::uint8_t> data(n);
        // Small alphabets and copied runs exercise matches; long literal runs
        // exercise the extension bytes.
        const unsigned alphabet = 1 + static_cast<unsigned>(gen() % 256);
        for (auto& b : data) b = static_cast<std::uint8_t>(gen() % alphabet);
        if (n > 100 && trial % 3 == 0) {
            for (std::size_t i = n / 2; i < n; ++i) data[i] = data[i - n / 3];
        }
        const auto coded = lz::compress(data);
        REQUIRE(lz::decompress(coded) == data);
    }
}

TEST_CASE("long runs and distant matches round trip") {
    std::vector<std::uint8_t> data(300000, 0);
    const auto noise = random_bytes(70000, 5);
    std::copy(noise.begin(), noise.end(), data.begin() + 1000);
    // Repeat a block exactly one window back, the farthest legal distance.
    std::copy(data.begin() + 1000, data.begin() + 5000, data.begin() + 1000 + lz::kWindowSize);
    CHECK(lz::decompress(lz::compress(data)) == data);
}

TEST_CASE("constant input collapses, random input stays within the overhead bound") {
    const std::vector<std::uint8_t> zeros(125000, 0);
    CHECK(lz::compress(zeros).size() < zeros.size() / 100);

    const auto noise = random_bytes(1 << 20, 42);
    const auto coded = lz::compress(noise);
    CHECK(static_cast<double>(coded.size()) <= static_cast<double>(noise.size()) * (1.0 + lz::kOverheadBound));
    CHECK(coded.size() >= noise.size() * 98 / 100);
}

TEST_CASE("compression is deterministic") {
    const auto noise = random_bytes(50000, 8);
    CHECK(lz::compress(noise) == lz::compress(noise));
}

TEST_CASE("malformed streams are rejected") {
    // Literal count of 3 with only one literal present.
    const std::vector<std::uint8_t> truncated{0x30, 'a'};
    CHECK_THROWS_AS(lz::decompress(truncated), Error);

    // One literal then a match reaching two bytes back.
    const std::vector<std::uint8_t> bad_offset{0x10, 'a', 0x01, 0x00};
    CHECK_THROWS_AS(lz::decompress(bad_offset), Error);

    // Final record with a non-zero match nibble.
    const std::vector<std::uint8_t> bad_tail{0x13, 'a'};
    CHECK_THROWS_AS(lz::decompress(bad_tail), Error);
}
