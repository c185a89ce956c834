#include "channel.hpp"

#include <stdexcept>

namespace risbec {

void ChannelParams::validate() const {
    auto check = [](double v, const char *name) {
        if (!(v > 0.0 && v < 1.0))
            throw std::invalid_argument(std::string(name) +
                                        " must lie strictly in (0, 1)");
    };
    check(delta_n, "delta_n");
    check(delta_s, "delta_s");
    check(delta_d, "delta_d");
}

AssociationSchedule AssociationSchedule::both_to_user(int user) {
    if (user != 1 && user != 2)
        throw std::invalid_argument("both_to_user: user must be 1 or 2");
    return {user == 1 ? Scheme::both_to_user1 : Scheme::both_to_user2, 0, 0};
}

AssociationSchedule AssociationSchedule::dynamic(double eta1, double eta2) {
    AssociationSchedule s{Scheme::dynamic_assoc, eta1, eta2};
    s.validate();
    return s;
}

void AssociationSchedule::validate() const {
    if (scheme != Scheme::dynamic_assoc) return;
    if (!(eta1 > 0.0 && eta1 < 0.5))
        throw std::invalid_argument("eta1 must lie strictly in (0, 1/2)");
    if (!(eta2 > 0.0 && eta2 < 0.5))
        throw std::invalid_argument("eta2 must lie strictly in (0, 1/2)");
    if (!(eta1 + eta2 < 1.0))
        throw std::invalid_argument("eta1 + eta2 must be less than 1");
}

ErasurePair erasure_profile(const AssociationSchedule &schedule,
                            const ChannelParams &params, int phase) {
    if (phase < 1 || phase > 3)
        throw std::out_of_range("erasure_profile: phase must be 1, 2 or 3");
    switch (schedule.scheme) {
    case Scheme::no_ris:
        return {params.delta_n, params.delta_n};
    case Scheme::neutral:
        return {params.delta_s, params.delta_s};
    case Scheme::both_to_user1:
        return {params.delta_d, params.delta_n};
    case Scheme::both_to_user2:
        return {params.delta_n, params.delta_d};
    case Scheme::dynamic_assoc:
        switch (phase) {
        case 1: return {params.delta_d, params.delta_n};
        case 2: return {params.delta_n, params.delta_d};
        default: return {params.delta_s, params.delta_s};
        }
    }
    throw std::logic_error("erasure_profile: unknown scheme");
}

ErasurePair erasure_profile_at(const AssociationSchedule &schedule,
                               const ChannelParams &params, double tau) {
    if (!(tau >= 0.0 && tau < 1.0))
        throw std::out_of_range("erasure_profile_at: tau must lie in [0, 1)");
    if (schedule.scheme != Scheme::dynamic_assoc)
        return erasure_profile(schedule, params, 1);
    int phase = 3;
    if (tau < schedule.eta1)
        phase = 1;
    else if (tau < schedule.eta1 + schedule.eta2)
        phase = 2;
    return erasure_profile(schedule, params, phase);
}

} // namespace risbec
