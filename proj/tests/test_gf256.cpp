#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf256.hpp"
#include "packet.hpp"
#include "rng.hpp"
#include "test_util.hpp"

using namespace risbec;

TEST_CASE("addition is XOR and every element is its own inverse") {
    for (int a = 0; a < 256; ++a) {
        CHECK(gf::add(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(a)) == 0);
        CHECK(gf::add(static_cast<std::uint8_t>(a), 0) == a);
    }
}

TEST_CASE("multiplicative identity and zero") {
    for (int a = 0; a < 256; ++a) {
        CHECK(gf::mul(static_cast<std::uint8_t>(a), 1) == a);
        CHECK(gf::mul(static_cast<std::uint8_t>(a), 0) == 0);
    }
}

TEST_CASE("multiplication matches the peasant-multiplication oracle") {
    // The classic value first.
    CHECK(gf::mul(0x57, 0x83) == 0xC1);
    CHECK(oracle::gf_mul(0x57, 0x83) == 0xC1);
    for (int a = 0; a < 256; ++a)
        for (int b = 0; b < 256; ++b)
            CHECK(gf::mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) ==
                  oracle::gf_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)));
}

TEST_CASE("a * inv(a) == 1 for all nonzero a; inv(0) throws") {
    for (int a = 1; a < 256; ++a) {
        const auto ua = static_cast<std::uint8_t>(a);
        CHECK(gf::mul(ua, gf::inv(ua)) == 1);
    }
    CHECK_THROWS_AS(gf::inv(0), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    Xoshiro256ss rng(42);
    for (int i = 0; i < 20000; ++i) {
        const auto a = static_cast<std::uint8_t>(rng.next());
        const auto b = static_cast<std::uint8_t>(rng.next());
        const auto c = static_cast<std::uint8_t>(rng.next());
        CHECK(gf::mul(a, b) == gf::mul(b, a));
        CHECK(gf::mul(gf::mul(a, b), c) == gf::mul(a, gf::mul(b, c)));
        CHECK(gf::mul(a, gf::add(b, c)) == gf::add(gf::mul(a, b), gf::mul(a, c)));
    }
}

TEST_CASE("addmul kernel equals scalar loop") {
    Xoshiro256ss rng(7);
    std::vector<std::uint8_t> dst(257), src(257);
    rng.fill_bytes(dst);
    rng.fill_bytes(src);
    for (int f = 0; f < 256; ++f) {
        auto expect = dst;
        for (std::size_t i = 0; i < expect.size(); ++i)
            expect[i] ^= oracle::gf_mul(static_cast<std::uint8_t>(f), src[i]);
        auto got = dst;
        gf::addmul(got.data(), src.data(), got.size(), static_cast<std::uint8_t>(f));
        CHECK(got == expect);
    }
}

namespace {

codec::Packet make_packet(std::uint64_t id, int owner,
                          std::initializer_list<std::uint8_t> bytes) {
    codec::Packet p;
    p.id = id;
    p.owner = owner;
    p.payload = bytes;
    return p;
}

} // namespace

TEST_CASE("combine: identity, self-cancellation, recovery by cancellation") {
    const auto p = make_packet(0, 1, {0x12, 0x34, 0x56});
    const auto q = make_packet(1, 2, {0xAB, 0xCD, 0xEF});
    const auto zero = make_packet(2, 1, {0, 0, 0});

    CHECK(codec::combine(p, zero).payload == p.payload);
    const auto self = codec::combine(p, p).payload;
    CHECK(self == std::vector<std::uint8_t>{0, 0, 0});

    // Rx1 knows q and recovers p from the combined packet.
    const auto c = codec::combine(p, q);
    CHECK(c.kind == codec::PacketKind::combined);
    CHECK(codec::combine(c, q).payload == p.payload);

    const auto short_packet = make_packet(3, 1, {0x01});
    CHECK_THROWS_AS(codec::combine(p, short_packet), std::invalid_argument);
}

TEST_CASE("combine is associative and commutative on random payloads") {
    Xoshiro256ss rng(99);
    for (int i = 0; i < 200; ++i) {
        codec::Packet a, b, c;
        a.payload.resize(16);
        b.payload.resize(16);
        c.payload.resize(16);
        rng.fill_bytes(a.payload);
        rng.fill_bytes(b.payload);
        rng.fill_bytes(c.payload);
        CHECK(codec::combine(a, b).payload == codec::combine(b, a).payload);
        CHECK(codec::combine(codec::combine(a, b), c).payload ==
              codec::combine(a, codec::combine(b, c)).payload);
    }
}

TEST_CASE("encode_repair: systematic rows, XOR row, dual-loop oracle") {
    Xoshiro256ss rng(5);
    std::vector<codec::Packet> sources(4);
    for (auto &s : sources) {
        s.payload.resize(32);
        rng.fill_bytes(s.payload);
    }

    for (std::size_t i = 0; i < sources.size(); ++i) {
        std::vector<std::uint8_t> unit(sources.size(), 0);
        unit[i] = 1;
        CHECK(codec::encode_repair(sources, unit) == sources[i].payload);
    }

    const std::vector<std::uint8_t> ones{1, 1};
    const auto xored =
        codec::encode_repair(std::span(sources).subspan(0, 2), ones);
    for (std::size_t b = 0; b < 32; ++b)
        CHECK(xored[b] == (sources[0].payload[b] ^ sources[1].payload[b]));

    // Independent scalar-loop recomputation with the oracle multiplier.
    for (int round = 0; round < 50; ++round) {
        std::vector<std::uint8_t> coeffs(sources.size());
        rng.fill_bytes(coeffs);
        std::vector<std::uint8_t> expect(32, 0);
        for (std::size_t i = 0; i < sources.size(); ++i)
            for (std::size_t b = 0; b < 32; ++b)
                expect[b] ^= oracle::gf_mul(coeffs[i], sources[i].payload[b]);
        CHECK(codec::encode_repair(sources, coeffs) == expect);
    }

    CHECK_THROWS_AS(codec::encode_repair({}, {}), std::invalid_argument);
}
