#include "planner.hpp"

#include <stdexcept>

#include "protocol.hpp"

namespace risbec::planner {

namespace {

struct NamedRegion {
    std::string name;
    regions::RateRegion region;
    std::optional<double> eta;
};

std::vector<NamedRegion> build_regions(const ChannelParams &params,
                                       double eta) {
    std::vector<NamedRegion> out;
    out.push_back({"no_ris", regions::no_ris_region(params), {}});
    out.push_back({"neutral", regions::neutral_region(params), {}});
    out.push_back({"both_to_user1", regions::both_to_user_region(params, 1), {}});
    out.push_back({"both_to_user2", regions::both_to_user_region(params, 2), {}});
    out.push_back({"dynamic_outer", regions::outer_region(params, eta, eta), eta});
    out.push_back(
        {"dynamic_achievable", regions::dynamic_achievable_region(params, eta), eta});
    return out;
}

ComparisonRow make_row(const NamedRegion &nr) {
    ComparisonRow row;
    row.scheme = nr.name;
    row.max_sum_rate = nr.region.max_sum_rate().second;
    const auto sym = nr.region.symmetric_point();
    row.sym_r1 = sym.r1;
    row.sym_r2 = sym.r2;
    row.max_r1 = nr.region.max_weighted(1.0, 0.0).r1;
    row.max_r2 = nr.region.max_weighted(0.0, 1.0).r2;
    row.eta = nr.eta;
    return row;
}

} // namespace

std::vector<ComparisonRow> compare_all(const ChannelParams &params,
                                       std::optional<double> eta) {
    const double e = eta.value_or(protocol::optimal_eta(params));
    std::vector<ComparisonRow> rows;
    for (const auto &nr : build_regions(params, e)) rows.push_back(make_row(nr));
    return rows;
}

BestSchedule best_schedule(const ChannelParams &params, Objective objective,
                           std::optional<double> eta) {
    const double e = eta.value_or(protocol::optimal_eta(params));
    const auto named = build_regions(params, e);
    BestSchedule best;
    double best_value = -1.0;
    for (const auto &nr : named) {
        double value = 0.0;
        if (objective.weighted) {
            const auto p = nr.region.max_weighted(objective.w1, objective.w2);
            value = objective.w1 * p.r1 + objective.w2 * p.r2;
        } else {
            value = nr.region.max_sum_rate().second;
        }
        if (value > best_value + regions::kGeomTol) {
            best_value = value;
            // The two dynamic rows analyze the same association.
            best.scheme = nr.eta ? "dynamic" : nr.name;
            best.eta = nr.eta;
            best.value = value;
        }
    }
    return best;
}

std::optional<SweepParam> parse_sweep_param(const std::string &name) {
    if (name == "delta_n") return SweepParam::delta_n;
    if (name == "delta_s") return SweepParam::delta_s;
    if (name == "delta_d") return SweepParam::delta_d;
    if (name == "eta") return SweepParam::eta;
    return {};
}

const char *sweep_param_name(SweepParam p) {
    switch (p) {
    case SweepParam::delta_n: return "delta_n";
    case SweepParam::delta_s: return "delta_s";
    case SweepParam::delta_d: return "delta_d";
    case SweepParam::eta: return "eta";
    }
    return "?";
}

std::vector<SweepPoint> sweep(const ChannelParams &params, SweepParam varying,
                              double from, double to, std::uint32_t steps,
                              std::optional<double> eta) {
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!(from <= to)) throw std::invalid_argument("sweep: from must be <= to");
    const double hi = varying == SweepParam::eta ? 0.5 : 1.0;
    if (!(from > 0.0 && to < hi))
        throw std::invalid_argument(std::string("sweep: ") +
                                    sweep_param_name(varying) +
                                    " range out of bounds");
    std::vector<SweepPoint> points;
    points.reserve(steps);
    for (std::uint32_t i = 0; i < steps; ++i) {
        const double v = from + (to - from) * static_cast<double>(i) /
                                    static_cast<double>(steps - 1);
        ChannelParams p = params;
        std::optional<double> e = eta;
        switch (varying) {
        case SweepParam::delta_n: p.delta_n = v; break;
        case SweepParam::delta_s: p.delta_s = v; break;
        case SweepParam::delta_d: p.delta_d = v; break;
        case SweepParam::eta: e = v; break;
        }
        points.push_back({v, compare_all(p, e)});
    }
    return points;
}

} // namespace risbec::planner
