#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "protocol.hpp"

using namespace risbec;
using namespace risbec::protocol;

namespace {
const ChannelParams kPaper{0.8, 0.5, 0.3};

std::vector<codec::Packet> random_packets(std::uint64_t seed, std::size_t count,
                                          std::size_t len, int owner) {
    auto packets = make_source_packets(seed, count, 0, static_cast<std::uint32_t>(len));
    for (auto &p : packets) p.owner = owner;
    return packets;
}
} // namespace

TEST_CASE("optimal_eta: paper value and vanishing-overhearing limit") {
    CHECK(optimal_eta(kPaper) == doctest::Approx(1.0 / 2.12).epsilon(1e-12));
    CHECK(optimal_eta(ChannelParams{0.8, 0.5, 1e-12}) ==
          doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("optimal_eta matches a grid search over the protocol throughput") {
    // Per-user budget with schedule fraction eta: phase 1 delivers
    // (1-dd*dn)*eta*n packets; phase 3 needs eta*dd*(1-dn)/(1-ds) of the
    // block and may not exceed 1-2*eta. The deliverable sum rate
    //   2*(1-dd*dn)*min(eta, (1-2*eta)*(1-ds)/(dd*(1-dn)))
    // is piecewise linear with its peak at the balance point.
    const ChannelParams p{0.6, 0.4, 0.2};
    const auto throughput = [&](double eta) {
        const double phase3_cap =
            (1.0 - 2.0 * eta) * (1.0 - p.delta_s) / (p.delta_d * (1.0 - p.delta_n));
        return 2.0 * (1.0 - p.delta_d * p.delta_n) * std::min(eta, phase3_cap);
    };
    double best_eta = 0.0, best_value = -1.0;
    for (double eta = 1e-5; eta < 0.5; eta += 1e-5) {
        const double v = throughput(eta);
        if (v > best_value) {
            best_value = v;
            best_eta = eta;
        }
    }
    const double closed_form = optimal_eta(p);
    CHECK(closed_form == doctest::Approx(0.46875).epsilon(1e-12));
    CHECK(std::abs(best_eta - closed_form) < 1e-5);
    CHECK(best_value == doctest::Approx(2.0 * (1.0 - 0.12) * closed_form).epsilon(1e-9));
}

TEST_CASE("resolve: defaults, overrides, and sanity bounds") {
    ProtocolConfig cfg;
    cfg.params = kPaper;
    cfg.n = 200000;
    const auto r = resolve(cfg);
    CHECK(r.eta1 == doctest::Approx(1.0 / 2.12).epsilon(1e-12));
    CHECK(r.m1 == 71698); // floor(0.76 * n / 2.12)
    CHECK(r.m2 == r.m1);
    CHECK(r.chunk == kDefaultChunk);

    cfg.m = 100;
    CHECK(resolve(cfg).m1 == 100);

    cfg.m = 100000; // phase windows no longer fit
    CHECK_THROWS_AS(resolve(cfg), std::invalid_argument);

    cfg.m.reset();
    cfg.n = 2;
    CHECK_THROWS_AS(resolve(cfg), std::invalid_argument); // m rounds to 0

    cfg.n = 200000;
    cfg.eta = 0.6;
    CHECK_THROWS_AS(resolve(cfg), std::invalid_argument);
}

TEST_CASE("uncoded phase: duration and queue-length formulas at (0.3, 0.8)") {
    // Rx1 owns the packets; d_own = 0.3, d_other = 0.8. Over 10^4 runs the
    // means must match m/(1-d_own*d_other) and m*d_own*(1-d_other)/(1-...).
    const std::size_t m = 100;
    const auto packets = random_packets(1, m, 8, 1);
    Xoshiro256ss rng(555);
    double slots = 0.0, queue = 0.0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const auto res = run_uncoded_phase(packets, 1, 0.3, 0.8, rng);
        slots += static_cast<double>(res.slots);
        queue += static_cast<double>(res.queue.size());
    }
    slots /= trials;
    queue /= trials;
    CHECK(std::abs(slots - 100.0 / 0.76) < 0.01 * (100.0 / 0.76));
    CHECK(std::abs(queue - 100.0 * 0.06 / 0.76) < 0.02 * (100.0 * 0.06 / 0.76));
}

TEST_CASE("uncoded phase: perfect own link needs exactly m slots") {
    const std::size_t m = 50;
    const auto packets = random_packets(2, m, 8, 1);
    Xoshiro256ss rng(1);
    const auto res = run_uncoded_phase(packets, 1, 0.0, 0.8, rng);
    CHECK(res.slots == m);
    CHECK(res.queue.empty());
    for (const auto got : res.owner_got) CHECK(got == 1);
}

TEST_CASE("uncoded phase: owner=2 mirrors the link roles") {
    const std::size_t m = 50;
    const auto packets = random_packets(3, m, 8, 2);
    Xoshiro256ss rng(1);
    // Rx2 owns; its link is perfect, so again exactly m slots.
    const auto res = run_uncoded_phase(packets, 2, 0.8, 0.0, rng);
    CHECK(res.slots == m);
    CHECK(res.queue.empty());
}

TEST_CASE("combined queue: pairing, zero padding, empty case") {
    const auto q1 = random_packets(4, 5, 8, 1);
    const auto q2 = random_packets(5, 3, 8, 2);

    const auto combined = build_combined_queue(q1, q2, 8);
    REQUIRE(combined.size() == 5);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(combined[i].kind == codec::PacketKind::combined);
        for (std::size_t b = 0; b < 8; ++b)
            CHECK(combined[i].payload[b] == (q1[i].payload[b] ^ q2[i].payload[b]));
    }
    // Beyond the shorter queue the packets ride verbatim.
    CHECK(combined[3].payload == q1[3].payload);
    CHECK(combined[4].payload == q1[4].payload);

    CHECK(build_combined_queue({}, {}, 8).empty());
    const auto swapped = build_combined_queue(q2, q1, 8);
    CHECK(swapped.size() == 5);
    CHECK(swapped[4].payload == q1[4].payload);
}

TEST_CASE("coded phase: empty input and near-perfect channel") {
    Xoshiro256ss rng(6);
    const auto empty = run_coded_phase({}, 0.5, 0.5, 128, 99, rng);
    CHECK(empty.slots == 0);

    const auto combined = random_packets(7, 40, 8, 0);
    // Perfect links: the systematic pass alone suffices, slots == K.
    const auto res = run_coded_phase(combined, 0.0, 0.0, 128, 99, rng);
    CHECK(res.slots == combined.size());
    for (std::size_t i = 0; i < combined.size(); ++i) {
        CHECK(res.decoded_rx1[i] == combined[i].payload);
        CHECK(res.decoded_rx2[i] == combined[i].payload);
    }
}

TEST_CASE("coded phase: mean duration approaches K/(1-ds) for large K") {
    // K = 500 in a single generation, symmetric erasure 0.5; the mean over
    // repeated runs must fall within 3% of K/(1-ds) = 1000 slots.
    const std::size_t k = 500;
    const auto combined = random_packets(8, k, 4, 0);
    Xoshiro256ss rng(777);
    const int trials = 150;
    double slots = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto res = run_coded_phase(combined, 0.5, 0.5, 512,
                                         1000 + static_cast<std::uint64_t>(t), rng);
        slots += static_cast<double>(res.slots);
        REQUIRE(res.decoded_rx1[k - 1] == combined[k - 1].payload);
    }
    slots /= trials;
    CHECK(std::abs(slots - 1000.0) < 30.0);
}

TEST_CASE("coded phase: chunked runs decode across generation boundaries") {
    const std::size_t k = 70; // two generations at chunk 32
    const auto combined = random_packets(9, k, 8, 0);
    Xoshiro256ss rng(41);
    const auto res = run_coded_phase(combined, 0.4, 0.6, 32, 7, rng);
    REQUIRE(res.decoded_rx1.size() == k);
    REQUIRE(res.decoded_rx2.size() == k);
    for (std::size_t i = 0; i < k; ++i) {
        CHECK(res.decoded_rx1[i] == combined[i].payload);
        CHECK(res.decoded_rx2[i] == combined[i].payload);
    }
}

TEST_CASE("simulate: small blocks decode for every seed and parameter draw") {
    Xoshiro256ss rng(2025);
    for (int round = 0; round < 60; ++round) {
        ProtocolConfig cfg;
        cfg.params = ChannelParams{0.1 + 0.8 * rng.u01(), 0.1 + 0.8 * rng.u01(),
                                   0.1 + 0.8 * rng.u01()};
        cfg.n = 4000;
        cfg.m = 1 + rng.next() % 20;
        cfg.payload_len = 16;
        cfg.seed = rng.next();
        const auto trial = simulate(cfg, rng.next() % 8);
        CHECK(trial.decode_ok);
        CHECK(trial.total_slots ==
              trial.slots_phase1 + trial.slots_phase2 + trial.slots_phase3);
        CHECK(trial.sum_rate ==
              doctest::Approx(2.0 * static_cast<double>(trial.m1) /
                              static_cast<double>(trial.total_slots)));
    }
}

TEST_CASE("simulate: 10^4 randomized small instances decode bit-exactly") {
    Xoshiro256ss rng(31337);
    int runs = 0;
    for (int round = 0; round < 10000; ++round) {
        ProtocolConfig cfg;
        cfg.params = ChannelParams{0.05 + 0.9 * rng.u01(), 0.05 + 0.9 * rng.u01(),
                                   0.05 + 0.9 * rng.u01()};
        cfg.n = 4000;
        cfg.m = 1 + rng.next() % 20;
        cfg.payload_len = 8;
        cfg.seed = rng.next();
        const auto trial = simulate(cfg, rng.next() % 4);
        if (!trial.decode_ok) break;
        ++runs;
    }
    CHECK(runs == 10000);
}

TEST_CASE("throughput approaches the analytic optimum as n grows") {
    const double target = 0.716981132075472;
    struct Level {
        std::uint64_t n;
        std::uint32_t trials;
    };
    const Level levels[] = {{10000, 40}, {100000, 12}, {1000000, 4}};
    double gap[3], se[3];
    for (int i = 0; i < 3; ++i) {
        ProtocolConfig cfg;
        cfg.params = kPaper;
        cfg.n = levels[i].n;
        cfg.seed = 99;
        const auto mc = monte_carlo(cfg, levels[i].trials, 1);
        CHECK(mc.decode_failures == 0);
        gap[i] = std::abs(mc.mean_sum_rate - target);
        se[i] = mc.std_sum_rate / std::sqrt(static_cast<double>(levels[i].trials));
    }
    // The gap shrinks (up to sampling noise) and the finest level sits close
    // to the bound from below.
    CHECK(gap[1] <= gap[0] + 3.0 * std::sqrt(se[0] * se[0] + se[1] * se[1]));
    CHECK(gap[2] <= gap[1] + 3.0 * std::sqrt(se[1] * se[1] + se[2] * se[2]));
    CHECK(gap[0] < 0.010);
    CHECK(gap[1] < 0.004);
    CHECK(gap[2] < 0.002);
}

TEST_CASE("simulate: identical seed and trial index reproduce bit-identically") {
    ProtocolConfig cfg;
    cfg.params = kPaper;
    cfg.n = 10000;
    cfg.seed = 123;
    const auto a = simulate(cfg, 0);
    const auto b = simulate(cfg, 0);
    CHECK(a.slots_phase1 == b.slots_phase1);
    CHECK(a.slots_phase2 == b.slots_phase2);
    CHECK(a.slots_phase3 == b.slots_phase3);
    CHECK(a.q1_len == b.q1_len);
    CHECK(a.sum_rate == b.sum_rate);
    const auto c = simulate(cfg, 1);
    CHECK(c.slots_phase1 != a.slots_phase1); // different trial stream
}

TEST_CASE("simulate: realized fractions concentrate near eta at n = 10^5") {
    ProtocolConfig cfg;
    cfg.params = kPaper;
    cfg.n = 100000;
    cfg.seed = 9;
    const auto mc = monte_carlo(cfg, 10, 1);
    const double eta = 1.0 / 2.12;
    CHECK(std::abs(mc.mean_eta1 - eta) < 0.005);
    CHECK(std::abs(mc.mean_eta2 - eta) < 0.005);
    CHECK(mc.decode_failures == 0);
    // Theorem 1 bounds the protocol: the simulated sum rate cannot beat the
    // analytic symmetric optimum by more than noise.
    CHECK(mc.mean_sum_rate <
          0.716981132075472 + 3.0 * mc.std_sum_rate / std::sqrt(10.0));
}

TEST_CASE("monte_carlo: aggregates are deterministic and match single runs") {
    ProtocolConfig cfg;
    cfg.params = kPaper;
    cfg.n = 8000;
    cfg.seed = 77;

    const auto one = monte_carlo(cfg, 1, 1);
    CHECK(one.trials.size() == 1);
    CHECK(one.mean_sum_rate == one.trials[0].sum_rate);
    CHECK(one.std_sum_rate == 0.0);
    const auto single = simulate(cfg, 0);
    CHECK(single.sum_rate == one.trials[0].sum_rate);

    const auto a = monte_carlo(cfg, 6, 1);
    const auto b = monte_carlo(cfg, 6, 3); // thread count must not matter
    CHECK(a.mean_sum_rate == b.mean_sum_rate);
    CHECK(a.std_sum_rate == b.std_sum_rate);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(a.trials[i].total_slots == b.trials[i].total_slots);

    CHECK_THROWS_AS(monte_carlo(cfg, 0, 1), std::invalid_argument);
}

TEST_CASE("virtual queue entries were NACKed by the owner only") {
    const std::size_t m = 200;
    const auto packets = random_packets(10, m, 8, 1);
    Xoshiro256ss rng(4242);
    const auto res = run_uncoded_phase(packets, 1, 0.4, 0.5, rng);
    for (const auto idx : res.queue) CHECK(res.owner_got[idx] == 0);
    // Every packet is accounted for: direct delivery or queued.
    std::size_t direct = 0;
    for (const auto got : res.owner_got) direct += got;
    CHECK(direct + res.queue.size() == m);
}
