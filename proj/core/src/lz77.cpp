#include "thermoinfo/lz77.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "thermoinfo/errors.hpp"

namespace thermoinfo::lz {

namespace {

constexpr std::int64_t kNone = -1;
constexpr std::size_t kWindowMask = kWindowSize - 1;

inline std::uint32_t hash3(const std::uint8_t* p) {
    const std::uint32_t v = (std::uint32_t{p[0]} << 16) | (std::uint32_t{p[1]} << 8) | p[2];
    return (v * 2654435761u) >> (32 - kHashBits);
}

void put_length_ext(std::vector<std::uint8_t>& out, std::size_t extra) {
    while (extra >= 255) {
        out.push_back(255);
        extra -= 255;
    }
    out.push_back(static_cast<std::uint8_t>(extra));
}

void emit(std::vector<std::uint8_t>& out, std::span<const std::uint8_t> literals, std::size_t match_len,
          std::size_t distance) {
    const std::size_t lit = literals.size();
    const bool has_match = match_len != 0;
    const std::size_t mcode = has_match ? match_len - kMinMatch : 0;

    const auto lit_nib = static_cast<std::uint8_t>(std::min<std::size_t>(lit, 15));
    const auto match_nib = static_cast<std::uint8_t>(std::min<std::size_t>(mcode, 15));
    out.push_back(static_cast<std::uint8_t>((lit_nib << 4) | match_nib));
    if (lit >= 15) put_length_ext(out, lit - 15);
    out.insert(out.end(), literals.begin(), literals.end());

    if (!has_match) return;
    const auto stored = static_cast<std::uint16_t>(distance - 1);
    out.push_back(static_cast<std::uint8_t>(stored & 0xFF));
    out.push_back(static_cast<std::uint8_t>(stored >> 8));
    if (mcode >= 15) put_length_ext(out, mcode - 15);
}

class MatchFinder {
public:
    explicit MatchFinder(std::span<const std::uint8_t> data) : data_(data), prev_(kWindowSize, kNone) {
        head_.fill(kNone);
    }

    void insert(std::size_t pos) {
        if (pos + kMinMatch > data_.size()) return;
        const std::uint32_t h = hash3(data_.data() + pos);
        prev_[pos & kWindowMask] = head_[h];
        head_[h] = static_cast<std::int64_t>(pos);
    }

    struct Match {
        std::size_t length = 0;
        std::size_t distance = 0;
    };

    Match longest(std::size_t pos) const {
        Match best;
        if (pos + kMinMatch > data_.size()) return best;
        const std::size_t limit = data_.size() - pos;
        const std::uint8_t* cur = data_.data() + pos;

        std::int64_t cand = head_[hash3(cur)];
        for (std::size_t depth = 0; depth < kMaxChainDepth && cand != kNone; ++depth) {
            const auto c = static_cast<std::size_t>(cand);
            if (c >= pos || pos - c > kWindowSize) break;

            const std::uint8_t* ref = data_.data() + c;
            if (ref[best.length] == cur[best.length] || best.length == 0) {
                std::size_t len = 0;
                while (len < limit && ref[len] == cur[len]) ++len;
                if (len > best.length) {
                    best = {len, pos - c};
                    if (len == limit) break;
                }
            }
            const std::int64_t next = prev_[c & kWindowMask];
            if (next >= cand) break;  // slot reused by a newer position
            cand = next;
        }
        if (best.length < kMinMatch) best = {};
        return best;
    }

private:
    std::span<const std::uint8_t> data_;
    std::array<std::int64_t, std::size_t{1} << kHashBits> head_{};
    std::vector<std::int64_t> prev_;
};

std::size_t read_length_ext(std::span<const std::uint8_t> in, std::size_t& pos) {
    std::size_t total = 0;
    while (true) {
        if (pos >= in.size()) throw Error("lz77: truncated length extension");
        const std::uint8_t b = in[pos++];
        total += b;
        if (b != 255) return total;
    }
}

} // namespace

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> input) {
    std::vector<std::uint8_t> out;
    out.reserve(input.size() + input.size() / 200 + 16);
    if (input.empty()) return out;

    MatchFinder finder(input);
    std::size_t pos = 0;
    std::size_t literal_start = 0;
    while (pos < input.size()) {
        const auto match = finder.longest(pos);
        if (match.length == 0) {
            finder.insert(pos);
            ++pos;
            continue;
        }
        emit(out, input.subspan(literal_start, pos - literal_start), match.length, match.distance);
        for (std::size_t i = 0; i < match.length; ++i) finder.insert(pos + i);
        pos += match.length;
        literal_start = pos;
    }
    emit(out, input.subspan(literal_start), 0, 0);
    return out;
}

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> stream) {
    std::vector<std::uint8_t> out;
    std::size_t pos = 0;
    while (pos < stream.size()) {
        const std::uint8_t token = stream[pos++];
        std::size_t lit = token >> 4;
        if (lit == 15) lit += read_length_ext(stream, pos);
        if (stream.size() - pos < lit) throw Error("lz77: truncated literal run");
        out.insert(out.end(), stream.begin() + static_cast<std::ptrdiff_t>(pos),
                   stream.begin() + static_cast<std::ptrdiff_t>(pos + lit));
        pos += lit;
        if (pos == stream.size()) {
            if ((token & 0x0F) != 0) throw Error("lz77: final record carries a match length");
            break;
        }

        if (stream.size() - pos < 2) throw Error("lz77: truncated offset");
        const std::size_t distance = (std::size_t{stream[pos]} | (std::size_t{stream[pos + 1]} << 8)) + 1;
        pos += 2;
        std::size_t len = (token & 0x0F);
        if (len == 15) len += read_length_ext(stream, pos);
        len += kMinMatch;
        if (distance > out.size()) throw Error("lz77: match offset points before start of output");

        const std::size_t from = out.size() - distance;
        for (std::size_t i = 0; i < len; ++i) {
            const std::uint8_t b = out[from + i];
            out.push_back(b);
        }
    }
    return out;
}

} // namespace thermoinfo::lz
