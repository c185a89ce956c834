// Rate regions of the two-user double-RIS erasure broadcast network.
//
// Every region is a bounded convex polygon in (R1, R2) described by two
// weighted-sum constraints a1*R1 + a2*R2 <= b plus implicit nonnegativity.
// Constraints are the native representation; vertices are derived on demand.

#pragma once

#include <utility>
#include <vector>

#include "channel.hpp"

namespace risbec::regions {

inline constexpr double kGeomTol = 1e-12;

struct Constraint {
    double a1 = 0.0;
    double a2 = 0.0;
    double b = 0.0;
};

struct Point {
    double r1 = 0.0;
    double r2 = 0.0;
};

class RateRegion {
public:
    explicit RateRegion(std::vector<Constraint> constraints);

    const std::vector<Constraint> &constraints() const { return constraints_; }

    // Vertices of the polygon in counterclockwise order starting at the
    // origin, deduplicated at kGeomTol.
    std::vector<Point> vertices() const;

    bool contains(Point p) const;

    // Vertex maximizing w1*R1 + w2*R2; ties broken by larger R1, then R2.
    Point max_weighted(double w1, double w2) const;

    std::pair<Point, double> max_sum_rate() const;

    // Boundary point on the line R1 = R2.
    Point symmetric_point() const;

private:
    std::vector<Constraint> constraints_;
};

// Weight of the outer bound, piecewise in the channel parameters and
// continuous across the branch boundary.
double beta(const ChannelParams &params);
bool beta_first_branch(const ChannelParams &params);

struct DerivedParams {
    double beta = 0.0;
    double delta_bar_1 = 0.0;
    double delta_bar_2 = 0.0;
    bool first_branch = false;
};

// Time-averaged erasure probabilities of the dynamic association. Requires
// eta1, eta2 in (0, 1/2).
std::pair<double, double> delta_bars(const ChannelParams &params, double eta1,
                                     double eta2);

DerivedParams derived_params(const ChannelParams &params, double eta1,
                             double eta2);

// Outer bound for the dynamic association:
//   R1 + beta*R2 <= beta*(1 - dbar2),  beta*R1 + R2 <= beta*(1 - dbar1).
RateRegion outer_region(const ChannelParams &params, double eta1, double eta2);

// Capacity regions of the static benchmarks.
RateRegion no_ris_region(const ChannelParams &params);
RateRegion neutral_region(const ChannelParams &params);
RateRegion both_to_user_region(const ChannelParams &params, int user);

// Region achieved by the three-phase protocol under the symmetric dynamic
// association with fraction eta.
RateRegion dynamic_achievable_region(const ChannelParams &params, double eta);

} // namespace risbec::regions
