// Fixed-length packets over GF(2^8) and elementwise packet combination.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace risbec::codec {

enum class PacketKind { original, combined, coded };

struct Packet {
    std::uint64_t id = 0;
    int owner = 0; // receiver id 1 or 2; 0 for packets without a single owner
    PacketKind kind = PacketKind::original;
    std::vector<std::uint8_t> payload;
};

// Elementwise field sum of two payloads of equal length; kind = combined.
// Throws std::invalid_argument on length mismatch.
Packet combine(const Packet &p, const Packet &q);

// sum_i coeffs[i] * sources[i].payload over GF(2^8). All payloads must share
// one length and coeffs.size() must equal sources.size() >= 1.
std::vector<std::uint8_t> encode_repair(std::span<const Packet> sources,
                                        std::span<const std::uint8_t> coeffs);

} // namespace risbec::codec
