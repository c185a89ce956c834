// Deterministic, platform-independent pseudorandom generators.
//
// All randomness in the simulator flows through these two generators so that
// results are bit-reproducible across platforms and across reimplementations
// of the protocol logic. SplitMix64 is used for seeding, stream splitting,
// and keyed one-shot draws; xoshiro256** is the bulk generator.

#pragma once

#include <cstdint>
#include <cstddef>
#include <span>

namespace risbec {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += kSplitMixGamma);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto &w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 significant bits, bit-portable.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    void fill_bytes(std::span<std::uint8_t> out) {
        std::size_t i = 0;
        while (i < out.size()) {
            std::uint64_t v = next();
            for (int b = 0; b < 8 && i < out.size(); ++b) {
                out[i++] = static_cast<std::uint8_t>(v);
                v >>= 8;
            }
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

// Keyed one-shot stream: independent SplitMix64 sequence per (key, index).
inline SplitMix64 keyed_stream(std::uint64_t key, std::uint64_t index) {
    return SplitMix64(key + (index + 1) * kSplitMixGamma);
}

} // namespace risbec
