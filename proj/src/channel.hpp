// Two independent packet-erasure links, RIS-user association schedules, and
// per-slot ACK/NACK feedback.
//
// The association schedule only enters the model through the pair of per-slot
// erasure probabilities it induces; feedback is perfect and delay-free.

#pragma once

#include <optional>
#include <string>

#include "packet.hpp"
#include "rng.hpp"

namespace risbec {

// Erasure probabilities by RIS aid level: none / single / double.
struct ChannelParams {
    double delta_n = 0.8;
    double delta_s = 0.5;
    double delta_d = 0.3;

    // Throws std::invalid_argument unless every value lies strictly in (0,1).
    void validate() const;

    // More RIS aid should never worsen a link; violations are legal but
    // flagged so callers can warn.
    bool ris_ordered() const {
        return delta_d <= delta_s && delta_s <= delta_n;
    }
};

enum class Scheme { no_ris, neutral, both_to_user1, both_to_user2, dynamic_assoc };

struct AssociationSchedule {
    Scheme scheme = Scheme::neutral;
    double eta1 = 0.0; // dynamic only
    double eta2 = 0.0;

    static AssociationSchedule no_ris() { return {Scheme::no_ris, 0, 0}; }
    static AssociationSchedule neutral() { return {Scheme::neutral, 0, 0}; }
    static AssociationSchedule both_to_user(int user);
    static AssociationSchedule dynamic(double eta1, double eta2);

    void validate() const;
};

struct SlotState {
    bool s1 = false; // link to Rx1 delivers
    bool s2 = false;
};

// Per-slot erasure probabilities (d1 for Rx1, d2 for Rx2).
struct ErasurePair {
    double d1 = 0.0;
    double d2 = 0.0;
};

// Profile in effect during protocol phase 1, 2 or 3. Static schemes are
// constant in time; the dynamic association aims both RISs at Rx1, then at
// Rx2, then one at each. Throws std::out_of_range for other phase indices.
ErasurePair erasure_profile(const AssociationSchedule &schedule,
                            const ChannelParams &params, int phase);

// Profile at normalized time tau = t/n in [0, 1); dynamic window boundaries
// sit at eta1 and eta1 + eta2.
ErasurePair erasure_profile_at(const AssociationSchedule &schedule,
                               const ChannelParams &params, double tau);

// One channel use: s_i = 1 with probability 1 - d_i, independently across
// links and slots. Exactly two generator draws per call, link 1 first; the
// draw order is part of the reproducibility contract.
inline SlotState sample_slot(double d1, double d2, Xoshiro256ss &rng) {
    SlotState st;
    st.s1 = rng.u01() >= d1;
    st.s2 = rng.u01() >= d2;
    return st;
}

// What one broadcast slot produces: each receiver either got the packet or
// an erasure, and the transmitter learns the slot state before the next
// slot. Pointers are non-owning views of the transmitted packet.
struct SlotObservation {
    const codec::Packet *rx1 = nullptr; // nullptr = erased
    const codec::Packet *rx2 = nullptr;
    SlotState feedback;
};

inline SlotObservation broadcast(const codec::Packet &x, SlotState state) {
    return {state.s1 ? &x : nullptr, state.s2 ? &x : nullptr, state};
}

} // namespace risbec
