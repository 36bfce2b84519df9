#pragma once

#include <cstdint>
#include <string_view>

namespace csmforge {

// Default master seed: the ASCII bytes of "CSM0".
inline constexpr std::uint64_t kDefaultSeed = 0x43534D30ull;

// splitmix64: tiny, well-known, platform-independent generator.  Every randomized
// computation derives a private stream from (master seed, labels...) so results are
// reproducible bit-for-bit and independent of evaluation order.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_label(std::uint64_t seed, std::uint64_t label) {
    std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull + label * 0xD1B54A32D192ED03ull);
    return splitmix64(s);
}

inline std::uint64_t mix_label(std::uint64_t seed, std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return mix_label(seed, h);
}

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}
    RngStream(std::uint64_t seed, std::string_view label) : state_(mix_label(seed, label)) {}

    std::uint64_t next() { return splitmix64(state_); }

    // Uniform residue in [0, p).  p is a 16..31-bit prime at desk scale, so the
    // modulo bias of a 64-bit draw is negligible and the result is deterministic.
    std::uint32_t uniform(std::uint32_t p) { return static_cast<std::uint32_t>(next() % p); }

    std::uint32_t uniform_nonzero(std::uint32_t p) {
        std::uint32_t v = 0;
        do {
            v = uniform(p);
        } while (v == 0);
        return v;
    }

    RngStream derive(std::uint64_t label) const { return RngStream(mix_label(state_, label)); }
    RngStream derive(std::string_view label) const { return RngStream(mix_label(state_, label)); }

private:
    std::uint64_t state_;
};

} // namespace csmforge
