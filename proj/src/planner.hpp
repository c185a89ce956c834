// Scheme comparison and parameter sweeps over the implemented RIS-user
// association family. The search is restricted to the five association
// schemes plus the symmetric dynamic fraction eta; whether some better
// association exists outside this family is an open problem, so results
// are labeled by scheme rather than claimed globally optimal.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regions.hpp"

namespace risbec::planner {

struct ComparisonRow {
    std::string scheme;
    double max_sum_rate = 0.0;
    double sym_r1 = 0.0;
    double sym_r2 = 0.0;
    double max_r1 = 0.0;
    double max_r2 = 0.0;
    std::optional<double> eta; // dynamic rows only
};

// One row per scheme, in this order: no_ris, neutral, both_to_user1,
// both_to_user2, dynamic_outer, dynamic_achievable. eta defaults to the
// optimal fraction for the given parameters.
std::vector<ComparisonRow> compare_all(const ChannelParams &params,
                                       std::optional<double> eta = {});

struct Objective {
    bool weighted = false;
    double w1 = 1.0;
    double w2 = 1.0;
};

struct BestSchedule {
    std::string scheme; // dynamic rows collapse to "dynamic"
    std::optional<double> eta;
    double value = 0.0;
};

// Argmax of the objective over the compare_all rows; earlier rows win ties.
BestSchedule best_schedule(const ChannelParams &params, Objective objective,
                           std::optional<double> eta = {});

enum class SweepParam { delta_n, delta_s, delta_d, eta };

std::optional<SweepParam> parse_sweep_param(const std::string &name);
const char *sweep_param_name(SweepParam p);

struct SweepPoint {
    double value = 0.0;
    std::vector<ComparisonRow> rows;
};

// Evenly spaced inclusive grid with `steps` >= 2 points. For delta sweeps
// eta is re-optimized per grid point unless supplied.
std::vector<SweepPoint> sweep(const ChannelParams &params, SweepParam varying,
                              double from, double to, std::uint32_t steps,
                              std::optional<double> eta = {});

} // namespace risbec::planner
