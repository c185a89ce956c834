#include "packet.hpp"

#include <stdexcept>

#include "gf256.hpp"

namespace risbec::codec {

Packet combine(const Packet &p, const Packet &q) {
    if (p.payload.size() != q.payload.size())
        throw std::invalid_argument("combine: payload length mismatch");
    Packet out;
    out.id = 0;
    out.owner = 0;
    out.kind = PacketKind::combined;
    out.payload = p.payload;
    for (std::size_t i = 0; i < out.payload.size(); ++i)
        out.payload[i] ^= q.payload[i];
    return out;
}

std::vector<std::uint8_t> encode_repair(std::span<const Packet> sources,
                                        std::span<const std::uint8_t> coeffs) {
    if (sources.empty())
        throw std::invalid_argument("encode_repair: empty source list");
    if (coeffs.size() != sources.size())
        throw std::invalid_argument("encode_repair: coefficient count mismatch");
    const std::size_t len = sources[0].payload.size();
    std::vector<std::uint8_t> out(len, 0);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (sources[i].payload.size() != len)
            throw std::invalid_argument("encode_repair: payload length mismatch");
        gf::addmul(out.data(), sources[i].payload.data(), len, coeffs[i]);
    }
    return out;
}

} // namespace risbec::codec
