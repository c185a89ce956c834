#include "gf256.hpp"

#include <array>
#include <stdexcept>

namespace risbec::gf {

namespace {

struct Tables {
    std::array<std::uint8_t, 512> exp{};
    std::array<std::uint8_t, 256> log{};
    // 64 KiB product table; row f holds f*x for all x.
    std::array<std::array<std::uint8_t, 256>, 256> prod{};

    Tables() {
        // 0x03 generates the multiplicative group for this polynomial
        // (0x02 does not: its order is only 51).
        std::uint16_t x = 1;
        for (int i = 0; i < 255; ++i) {
            exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
            log[x] = static_cast<std::uint8_t>(i);
            x = static_cast<std::uint16_t>((x << 1) ^ x);
            if (x & 0x100) x ^= kReductionPoly;
        }
        for (int i = 255; i < 512; ++i)
            exp[static_cast<std::size_t>(i)] = exp[static_cast<std::size_t>(i - 255)];
        for (int a = 1; a < 256; ++a)
            for (int b = 1; b < 256; ++b)
                prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    exp[static_cast<std::size_t>(log[static_cast<std::size_t>(a)]) +
                        static_cast<std::size_t>(log[static_cast<std::size_t>(b)])];
    }
};

const Tables &tables() {
    static const Tables t;
    return t;
}

} // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    return tables().prod[a][b];
}

std::uint8_t inv(std::uint8_t a) {
    if (a == 0) throw std::domain_error("gf256: inverse of zero");
    const Tables &t = tables();
    return t.exp[static_cast<std::size_t>(255 - t.log[a])];
}

const std::uint8_t *mul_row(std::uint8_t f) {
    return tables().prod[f].data();
}

void addmul(std::uint8_t *dst, const std::uint8_t *src, std::size_t n,
            std::uint8_t f) {
    if (f == 0) return;
    if (f == 1) {
        for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
        return;
    }
    const std::uint8_t *row = mul_row(f);
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= row[src[i]];
}

void scale(std::uint8_t *dst, std::size_t n, std::uint8_t f) {
    if (f == 1) return;
    const std::uint8_t *row = mul_row(f);
    for (std::size_t i = 0; i < n; ++i) dst[i] = row[dst[i]];
}

} // namespace risbec::gf
