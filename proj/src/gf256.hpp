// GF(2^8) arithmetic with the AES reduction polynomial x^8+x^4+x^3+x+1.
//
// Addition is bytewise XOR. Multiplication goes through log/exp tables; hot
// row operations use a full 256x256 product table so the inner loop is one
// lookup and one XOR per byte.

#pragma once

#include <cstddef>
#include <cstdint>

namespace risbec::gf {

inline constexpr std::uint16_t kReductionPoly = 0x11B;

inline std::uint8_t add(std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>(a ^ b);
}

std::uint8_t mul(std::uint8_t a, std::uint8_t b);

// Multiplicative inverse; throws std::domain_error for a == 0.
std::uint8_t inv(std::uint8_t a);

// Row of the product table: mul_row(f)[x] == f * x.
const std::uint8_t *mul_row(std::uint8_t f);

// dst[i] ^= f * src[i] for i in [0, n).
void addmul(std::uint8_t *dst, const std::uint8_t *src, std::size_t n,
            std::uint8_t f);

// dst[i] = f * dst[i] for i in [0, n).
void scale(std::uint8_t *dst, std::size_t n, std::uint8_t f);

} // namespace risbec::gf
