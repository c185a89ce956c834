// Three-phase opportunistic transmission protocol with causal ACK/NACK
// feedback, executed against the simulated erasure channel.
//
// Phase 1 sends user-1 packets until at least one receiver has each; packets
// only the other receiver caught enter a virtual queue. Phase 2 mirrors it
// for user 2. Phase 3 sends the pairwise XOR of the two queues through a
// systematic random-linear erasure code until both receivers can decode.
// Association switches at phase boundaries (event-driven), so a run reports
// realized phase fractions next to the nominal eta.
//
// Reproducibility contract (shared with any reimplementation):
//   - per-trial streams are consecutive SplitMix64 outputs of
//     keyed_stream(master_seed, trial_index): channel, payload, coef key;
//   - the channel generator is Xoshiro256ss(channel_seed) with exactly two
//     u01 draws per slot, link 1 first;
//   - source payloads are Xoshiro256ss(payload_seed) bytes, user-1 packets
//     first, each packet filled front to back;
//   - repair coefficients for the phase-3 slot with 0-based index t are the
//     bytes of keyed_stream(coef_key, t).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "channel.hpp"
#include "packet.hpp"
#include "rng.hpp"

namespace risbec::protocol {

// Phase fraction balancing the three average phase durations so the block
// is exactly used: (1-ds) / (2(1-ds) + dd(1-dn)).
double optimal_eta(const ChannelParams &params);

// Phase-3 generation cap. Chunking bounds the decoder's cubic cost at large
// K; runs with K <= chunk use a single full-block code.
inline constexpr std::uint32_t kDefaultChunk = 128;

struct ProtocolConfig {
    ChannelParams params;
    std::uint64_t n = 200000;        // nominal block length in slots
    std::optional<double> eta;       // default: optimal_eta(params)
    std::optional<double> eta_user2; // asymmetric runs; default: eta
    std::optional<std::uint64_t> m;  // packets per user; default from (n, eta)
    std::uint32_t payload_len = 64;
    std::uint64_t seed = 1;
    std::uint32_t chunk = 0;         // 0 selects kDefaultChunk
};

struct ResolvedConfig {
    ChannelParams params;
    std::uint64_t n = 0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    std::uint32_t payload_len = 0;
    std::uint64_t seed = 0;
    std::uint32_t chunk = 0;
};

// Applies defaults (eta* and m_i = floor((1-dd*dn)*eta_i*n)) and validates
// the config invariants; throws std::invalid_argument on violation.
ResolvedConfig resolve(const ProtocolConfig &config);

struct TrialStreams {
    std::uint64_t channel_seed = 0;
    std::uint64_t payload_seed = 0;
    std::uint64_t coef_key = 0;
};

TrialStreams derive_trial_streams(std::uint64_t master_seed,
                                  std::uint64_t trial_index);

void repair_coefficients(std::uint64_t coef_key, std::uint64_t slot_index,
                         std::span<std::uint8_t> out);

// Source packets for one trial: ids 0..m1+m2-1, user-1 packets first.
std::vector<codec::Packet> make_source_packets(std::uint64_t payload_seed,
                                               std::uint64_t m1,
                                               std::uint64_t m2,
                                               std::uint32_t payload_len);

struct UncodedPhaseResult {
    std::uint64_t slots = 0;
    // Indices into the input span, in transmission order: packets the owner
    // missed but the other receiver caught (the virtual queue).
    std::vector<std::uint32_t> queue;
    // Per input packet: 1 if the owner received it directly.
    std::vector<std::uint8_t> owner_got;
};

// Retransmits each packet until some receiver obtains it. d1/d2 are the
// erasure probabilities of the links to Rx1/Rx2; owner is 1 or 2.
UncodedPhaseResult run_uncoded_phase(std::span<const codec::Packet> packets,
                                     int owner, double d1, double d2,
                                     Xoshiro256ss &rng);

// Pairwise sums q1[i] + q2[i]; the shorter queue is zero-padded, so the
// result has K = max(|q1|, |q2|) packets (empty when both queues are empty).
std::vector<codec::Packet> build_combined_queue(
    std::span<const codec::Packet> q1, std::span<const codec::Packet> q2,
    std::uint32_t payload_len);

struct CodedPhaseResult {
    std::uint64_t slots = 0;
    // Combined payloads as decoded by each receiver, index-aligned with the
    // input; bit-exact on success by construction of the code.
    std::vector<std::vector<std::uint8_t>> decoded_rx1;
    std::vector<std::vector<std::uint8_t>> decoded_rx2;
};

// Per chunk: one systematic pass, then random repair rows until both
// receivers reach full rank. Terminates with probability one;
// expected slots approach K/(1-d) for symmetric erasure probability d.
CodedPhaseResult run_coded_phase(std::span<const codec::Packet> combined,
                                 double d1, double d2, std::uint32_t chunk,
                                 std::uint64_t coef_key, Xoshiro256ss &rng);

struct TrialResult {
    std::uint64_t slots_phase1 = 0;
    std::uint64_t slots_phase2 = 0;
    std::uint64_t slots_phase3 = 0;
    std::uint64_t total_slots = 0;
    std::uint64_t q1_len = 0;
    std::uint64_t q2_len = 0;
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    double sum_rate = 0.0;      // (m1 + m2) / total_slots
    double realized_eta1 = 0.0; // slots_phase1 / n
    double realized_eta2 = 0.0;
    bool decode_ok = false;
};

TrialResult simulate_resolved(const ResolvedConfig &config,
                              std::uint64_t trial_index);

inline TrialResult simulate(const ProtocolConfig &config,
                            std::uint64_t trial_index = 0) {
    return simulate_resolved(resolve(config), trial_index);
}

struct MonteCarloResult {
    ResolvedConfig config;
    std::vector<TrialResult> trials;
    double mean_sum_rate = 0.0;
    double std_sum_rate = 0.0; // sample std; 0 for a single trial
    double mean_eta1 = 0.0;
    double mean_eta2 = 0.0;
    std::uint32_t decode_failures = 0;
};

// Trials use independent derived streams and are merged by trial index, so
// the aggregate is identical for any thread count (0 = hardware threads).
MonteCarloResult monte_carlo(const ProtocolConfig &config, std::uint32_t trials,
                             std::uint32_t threads = 0);

} // namespace risbec::protocol
