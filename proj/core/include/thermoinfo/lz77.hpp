#pragma once

// Sliding-window match coder used as the frozen "ideal compressor" proxy.
//
// Stream format (byte oriented, no entropy coding): a sequence of records
//
//   token        1 byte: high nibble = literal count, low nibble = match length - 3
//   lit ext      present when the literal nibble is 15: bytes added until one is < 255
//   literals     raw bytes
//   offset       2 bytes little endian, distance - 1 (distance in 1..65536)
//   match ext    present when the match nibble is 15, same scheme as lit ext
//
// The final record carries literals only and ends the stream; its match
// nibble is zero and no offset follows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace thermoinfo::lz {

inline constexpr std::size_t kWindowSize = 64 * 1024;
inline constexpr std::size_t kMinMatch = 3;
inline constexpr std::size_t kMaxChainDepth = 64;
inline constexpr unsigned kHashBits = 16;

/// Documented upper bound on expansion of incompressible input. Actual
/// worst case is 1 token byte + 1 extension byte per 255 literals plus the
/// cost of spurious 3-byte matches, well under 1% for inputs above 1 KiB.
inline constexpr double kOverheadBound = 0.05;

/// Greedy parse: at each position take the longest match found within
/// kMaxChainDepth hash-chain candidates, or emit a literal.
std::vector<std::uint8_t> compress(std::span<const std::uint8_t> input);

/// Inverse of compress. Throws thermoinfo::Error on a malformed stream.
std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> stream);

} // namespace thermoinfo::lz
