#include "protocol.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "decoder.hpp"

namespace risbec::protocol {

double optimal_eta(const ChannelParams &params) {
    params.validate();
    const double s = 1.0 - params.delta_s;
    return s / (2.0 * s + params.delta_d * (1.0 - params.delta_n));
}

ResolvedConfig resolve(const ProtocolConfig &config) {
    config.params.validate();
    ResolvedConfig r;
    r.params = config.params;
    r.n = config.n;
    r.payload_len = config.payload_len;
    r.seed = config.seed;
    r.chunk = config.chunk != 0 ? config.chunk : kDefaultChunk;
    r.eta1 = config.eta.value_or(optimal_eta(config.params));
    r.eta2 = config.eta_user2.value_or(r.eta1);
    AssociationSchedule::dynamic(r.eta1, r.eta2); // eta range check

    if (config.payload_len == 0)
        throw std::invalid_argument("payload_len must be >= 1");
    const double cap = 1.0 - config.params.delta_d * config.params.delta_n;
    r.m1 = config.m ? *config.m
                    : static_cast<std::uint64_t>(
                          std::floor(cap * r.eta1 * static_cast<double>(r.n)));
    r.m2 = config.m ? *config.m
                    : static_cast<std::uint64_t>(
                          std::floor(cap * r.eta2 * static_cast<double>(r.n)));
    if (r.m1 < 1 || r.m2 < 1)
        throw std::invalid_argument("m must be >= 1 (n too small for eta)");
    const double window =
        2.0 * std::ceil(static_cast<double>(std::max(r.m1, r.m2)) / cap);
    if (static_cast<double>(r.n) < window)
        throw std::invalid_argument("n too small: nominal windows do not fit m");
    return r;
}

TrialStreams derive_trial_streams(std::uint64_t master_seed,
                                  std::uint64_t trial_index) {
    SplitMix64 sm = keyed_stream(master_seed, trial_index);
    TrialStreams s;
    s.channel_seed = sm.next();
    s.payload_seed = sm.next();
    s.coef_key = sm.next();
    return s;
}

void repair_coefficients(std::uint64_t coef_key, std::uint64_t slot_index,
                         std::span<std::uint8_t> out) {
    SplitMix64 sm = keyed_stream(coef_key, slot_index);
    std::size_t i = 0;
    while (i < out.size()) {
        std::uint64_t v = sm.next();
        for (int b = 0; b < 8 && i < out.size(); ++b) {
            out[i++] = static_cast<std::uint8_t>(v);
            v >>= 8;
        }
    }
}

std::vector<codec::Packet> make_source_packets(std::uint64_t payload_seed,
                                               std::uint64_t m1,
                                               std::uint64_t m2,
                                               std::uint32_t payload_len) {
    Xoshiro256ss rng(payload_seed);
    std::vector<codec::Packet> packets(m1 + m2);
    for (std::uint64_t i = 0; i < m1 + m2; ++i) {
        packets[i].id = i;
        packets[i].owner = i < m1 ? 1 : 2;
        packets[i].kind = codec::PacketKind::original;
        packets[i].payload.resize(payload_len);
        rng.fill_bytes(packets[i].payload);
    }
    return packets;
}

UncodedPhaseResult run_uncoded_phase(std::span<const codec::Packet> packets,
                                     int owner, double d1, double d2,
                                     Xoshiro256ss &rng) {
    if (owner != 1 && owner != 2)
        throw std::invalid_argument("run_uncoded_phase: owner must be 1 or 2");
    UncodedPhaseResult res;
    res.owner_got.assign(packets.size(), 0);
    for (std::uint32_t i = 0; i < packets.size(); ++i) {
        for (;;) {
            ++res.slots;
            const SlotState st = sample_slot(d1, d2, rng);
            const auto obs = broadcast(packets[i], st);
            const bool own = owner == 1 ? obs.rx1 != nullptr : obs.rx2 != nullptr;
            const bool other = owner == 1 ? obs.rx2 != nullptr : obs.rx1 != nullptr;
            if (own) {
                res.owner_got[i] = 1;
                break;
            }
            if (other) {
                res.queue.push_back(i);
                break;
            }
        }
    }
    return res;
}

std::vector<codec::Packet> build_combined_queue(
    std::span<const codec::Packet> q1, std::span<const codec::Packet> q2,
    std::uint32_t payload_len) {
    const std::size_t k = std::max(q1.size(), q2.size());
    codec::Packet zero;
    zero.payload.assign(payload_len, 0);
    std::vector<codec::Packet> combined;
    combined.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const codec::Packet &a = i < q1.size() ? q1[i] : zero;
        const codec::Packet &b = i < q2.size() ? q2[i] : zero;
        combined.push_back(codec::combine(a, b));
        combined.back().id = i;
    }
    return combined;
}

CodedPhaseResult run_coded_phase(std::span<const codec::Packet> combined,
                                 double d1, double d2, std::uint32_t chunk,
                                 std::uint64_t coef_key, Xoshiro256ss &rng) {
    CodedPhaseResult res;
    const std::size_t total = combined.size();
    if (total == 0) return res;
    if (chunk == 0)
        throw std::invalid_argument("run_coded_phase: chunk must be >= 1");
    const std::size_t len = combined[0].payload.size();
    res.decoded_rx1.reserve(total);
    res.decoded_rx2.reserve(total);

    std::uint64_t slot_index = 0; // 0-based within phase 3
    std::vector<std::uint8_t> coeffs;
    for (std::size_t base = 0; base < total; base += chunk) {
        const std::size_t g = std::min<std::size_t>(chunk, total - base);
        codec::RowDecoder dec1(g, len);
        codec::RowDecoder dec2(g, len);
        for (std::size_t j = 0; j < g; ++j) {
            const SlotState st = sample_slot(d1, d2, rng);
            if (st.s1) dec1.insert_systematic(j, combined[base + j].payload);
            if (st.s2) dec2.insert_systematic(j, combined[base + j].payload);
            ++res.slots;
            ++slot_index;
        }
        coeffs.resize(g);
        while (!dec1.complete() || !dec2.complete()) {
            repair_coefficients(coef_key, slot_index, coeffs);
            const SlotState st = sample_slot(d1, d2, rng);
            if (st.s1 || st.s2) {
                const auto payload =
                    codec::encode_repair(combined.subspan(base, g), coeffs);
                if (st.s1 && !dec1.complete()) dec1.insert(coeffs, payload);
                if (st.s2 && !dec2.complete()) dec2.insert(coeffs, payload);
            }
            ++res.slots;
            ++slot_index;
        }
        auto sol1 = dec1.solve();
        auto sol2 = dec2.solve();
        for (std::size_t j = 0; j < g; ++j) {
            res.decoded_rx1.push_back(std::move(sol1[j]));
            res.decoded_rx2.push_back(std::move(sol2[j]));
        }
    }
    return res;
}

namespace {

// Recovers the queued packets owned by `rx` from the decoded combined
// payloads by cancelling that receiver's side information, and checks every
// owned packet (direct or recovered) against the transmitted original.
bool verify_receiver(int rx, std::span<const codec::Packet> packets,
                     std::span<const codec::Packet> own_phase_packets,
                     const UncodedPhaseResult &own_phase,
                     std::span<const codec::Packet> other_queue,
                     const std::vector<std::vector<std::uint8_t>> &decoded) {
    (void)rx;
    const std::size_t own_queue_len = own_phase.queue.size();
    std::size_t queued_seen = 0;
    for (std::size_t i = 0; i < own_phase_packets.size(); ++i) {
        if (own_phase.owner_got[i]) continue; // received directly
        if (queued_seen >= own_queue_len) return false; // lost packet: bug
        const std::uint32_t expect = own_phase.queue[queued_seen];
        if (expect != i) return false;
        // decoded[j] = own_queue[j] + other_queue[j] (zero-padded)
        std::vector<std::uint8_t> rec = decoded[queued_seen];
        if (queued_seen < other_queue.size()) {
            const auto &side = other_queue[queued_seen].payload;
            for (std::size_t b = 0; b < rec.size(); ++b) rec[b] ^= side[b];
        }
        if (rec != own_phase_packets[i].payload) return false;
        ++queued_seen;
    }
    (void)packets;
    return queued_seen == own_queue_len;
}

} // namespace

TrialResult simulate_resolved(const ResolvedConfig &config,
                              std::uint64_t trial_index) {
    const TrialStreams streams = derive_trial_streams(config.seed, trial_index);
    Xoshiro256ss chan(streams.channel_seed);
    const auto packets = make_source_packets(streams.payload_seed, config.m1,
                                             config.m2, config.payload_len);
    const auto schedule = AssociationSchedule::dynamic(config.eta1, config.eta2);
    const std::span<const codec::Packet> all(packets);
    const auto user1 = all.subspan(0, config.m1);
    const auto user2 = all.subspan(config.m1, config.m2);

    const auto prof1 = erasure_profile(schedule, config.params, 1);
    const auto phase1 = run_uncoded_phase(user1, 1, prof1.d1, prof1.d2, chan);
    const auto prof2 = erasure_profile(schedule, config.params, 2);
    const auto phase2 = run_uncoded_phase(user2, 2, prof2.d1, prof2.d2, chan);

    std::vector<codec::Packet> q1; // wanted by Rx1, held by Rx2
    q1.reserve(phase1.queue.size());
    for (const auto idx : phase1.queue) q1.push_back(user1[idx]);
    std::vector<codec::Packet> q2;
    q2.reserve(phase2.queue.size());
    for (const auto idx : phase2.queue) q2.push_back(user2[idx]);

    const auto combined = build_combined_queue(q1, q2, config.payload_len);
    const auto prof3 = erasure_profile(schedule, config.params, 3);
    const auto phase3 = run_coded_phase(combined, prof3.d1, prof3.d2,
                                        config.chunk, streams.coef_key, chan);

    TrialResult res;
    res.slots_phase1 = phase1.slots;
    res.slots_phase2 = phase2.slots;
    res.slots_phase3 = phase3.slots;
    res.total_slots = phase1.slots + phase2.slots + phase3.slots;
    res.q1_len = q1.size();
    res.q2_len = q2.size();
    res.m1 = config.m1;
    res.m2 = config.m2;
    res.sum_rate = static_cast<double>(config.m1 + config.m2) /
                   static_cast<double>(res.total_slots);
    res.realized_eta1 =
        static_cast<double>(phase1.slots) / static_cast<double>(config.n);
    res.realized_eta2 =
        static_cast<double>(phase2.slots) / static_cast<double>(config.n);
    res.decode_ok =
        verify_receiver(1, all, user1, phase1, q2, phase3.decoded_rx1) &&
        verify_receiver(2, all, user2, phase2, q1, phase3.decoded_rx2);
    return res;
}

MonteCarloResult monte_carlo(const ProtocolConfig &config, std::uint32_t trials,
                             std::uint32_t threads) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    MonteCarloResult mc;
    mc.config = resolve(config);
    mc.trials.resize(trials);

    std::uint32_t workers =
        threads != 0 ? threads
                     : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, trials);
    if (workers <= 1) {
        for (std::uint32_t i = 0; i < trials; ++i)
            mc.trials[i] = simulate_resolved(mc.config, i);
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint32_t i = next.fetch_add(1);
                    if (i >= trials) return;
                    mc.trials[i] = simulate_resolved(mc.config, i);
                }
            });
        }
        for (auto &t : pool) t.join();
    }

    double sum = 0.0, sum_eta1 = 0.0, sum_eta2 = 0.0;
    for (const auto &t : mc.trials) {
        sum += t.sum_rate;
        sum_eta1 += t.realized_eta1;
        sum_eta2 += t.realized_eta2;
        if (!t.decode_ok) ++mc.decode_failures;
    }
    mc.mean_sum_rate = sum / trials;
    mc.mean_eta1 = sum_eta1 / trials;
    mc.mean_eta2 = sum_eta2 / trials;
    if (trials > 1) {
        double ss = 0.0;
        for (const auto &t : mc.trials) {
            const double d = t.sum_rate - mc.mean_sum_rate;
            ss += d * d;
        }
        mc.std_sum_rate = std::sqrt(ss / (trials - 1));
    }
    return mc;
}

} // namespace risbec::protocol
