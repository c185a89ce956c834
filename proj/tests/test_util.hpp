// Shared independent oracles for the test suites. These deliberately avoid
// the library's own code paths: field multiplication is peasant-style with
// the reduction polynomial, rank is a from-scratch dense elimination, and
// 2x2 vertex intersections use Cramer's rule.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

// Peasant multiplication over GF(2^8) with polynomial x^8+x^4+x^3+x+1.
inline std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
    std::uint16_t acc = 0;
    std::uint16_t aa = a;
    std::uint8_t bb = b;
    while (bb) {
        if (bb & 1) acc ^= aa;
        aa <<= 1;
        if (aa & 0x100) aa ^= 0x11B;
        bb >>= 1;
    }
    return static_cast<std::uint8_t>(acc);
}

inline std::uint8_t gf_pow(std::uint8_t a, unsigned e) {
    std::uint8_t r = 1;
    while (e) {
        if (e & 1) r = gf_mul(r, a);
        a = gf_mul(a, a);
        e >>= 1;
    }
    return r;
}

// a^254 = a^-1 in GF(2^8).
inline std::uint8_t gf_inv(std::uint8_t a) { return gf_pow(a, 254); }

// Rank of a dense matrix over GF(2^8), destructive fresh elimination.
inline std::size_t gf_rank(std::vector<std::vector<std::uint8_t>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint8_t inv = gf_inv(rows[rank][c]);
        for (auto &x : rows[rank]) x = gf_mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::uint8_t f = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[r][j] ^= gf_mul(f, rows[rank][j]);
        }
        ++rank;
    }
    return rank;
}

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Intersection of a1*x + a2*y = b with c1*x + c2*y = d (Cramer's rule).
inline std::optional<Point2> intersect(double a1, double a2, double b,
                                       double c1, double c2, double d) {
    const double det = a1 * c2 - a2 * c1;
    if (det == 0.0) return {};
    return Point2{(b * c2 - a2 * d) / det, (a1 * d - b * c1) / det};
}

} // namespace oracle
