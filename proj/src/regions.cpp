#include "regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risbec::regions {

RateRegion::RateRegion(std::vector<Constraint> constraints)
    : constraints_(std::move(constraints)) {
    for (const auto &c : constraints_) {
        if (c.a1 < 0.0 || c.a2 < 0.0 || c.b < 0.0)
            throw std::invalid_argument("RateRegion: coefficients must be >= 0");
        if (c.a1 + c.a2 <= 0.0)
            throw std::invalid_argument("RateRegion: degenerate constraint");
    }
}

namespace {

bool nearly_equal(Point a, Point b) {
    return std::abs(a.r1 - b.r1) <= kGeomTol && std::abs(a.r2 - b.r2) <= kGeomTol;
}

double cross(Point o, Point a, Point b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

// Monotone chain; returns the hull counterclockwise starting at the
// lexicographically smallest point, which for these regions is the origin.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
    });
    pts.erase(std::unique(pts.begin(), pts.end(), nearly_equal), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> hull;
    for (const Point &p : pts) { // lower
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull.back(), p) <= kGeomTol)
            hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) { // upper
        while (hull.size() >= lower &&
               cross(hull[hull.size() - 2], hull.back(), *it) <= kGeomTol)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    return hull;
}

} // namespace

bool RateRegion::contains(Point p) const {
    if (p.r1 < -kGeomTol || p.r2 < -kGeomTol) return false;
    for (const auto &c : constraints_)
        if (c.a1 * p.r1 + c.a2 * p.r2 > c.b + kGeomTol) return false;
    return true;
}

std::vector<Point> RateRegion::vertices() const {
    std::vector<Point> candidates{{0.0, 0.0}};
    for (const auto &c : constraints_) {
        if (c.a1 > 0.0) candidates.push_back({c.b / c.a1, 0.0});
        if (c.a2 > 0.0) candidates.push_back({0.0, c.b / c.a2});
    }
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        for (std::size_t j = i + 1; j < constraints_.size(); ++j) {
            const auto &u = constraints_[i];
            const auto &v = constraints_[j];
            const double det = u.a1 * v.a2 - u.a2 * v.a1;
            if (std::abs(det) <= kGeomTol) continue;
            candidates.push_back({(u.b * v.a2 - u.a2 * v.b) / det,
                                  (u.a1 * v.b - u.b * v.a1) / det});
        }
    }
    std::vector<Point> feasible;
    for (Point p : candidates)
        if (contains(p)) feasible.push_back(p);
    return convex_hull(std::move(feasible));
}

Point RateRegion::max_weighted(double w1, double w2) const {
    const auto verts = vertices();
    if (verts.empty()) throw std::logic_error("max_weighted: empty region");
    Point best = verts.front();
    double best_val = w1 * best.r1 + w2 * best.r2;
    for (const Point &p : verts) {
        const double val = w1 * p.r1 + w2 * p.r2;
        if (val > best_val + kGeomTol ||
            (val > best_val - kGeomTol &&
             (p.r1 > best.r1 + kGeomTol ||
              (p.r1 > best.r1 - kGeomTol && p.r2 > best.r2 + kGeomTol)))) {
            best = p;
            best_val = val;
        }
    }
    return best;
}

std::pair<Point, double> RateRegion::max_sum_rate() const {
    const Point p = max_weighted(1.0, 1.0);
    return {p, p.r1 + p.r2};
}

Point RateRegion::symmetric_point() const {
    double r = std::numeric_limits<double>::infinity();
    for (const auto &c : constraints_) r = std::min(r, c.b / (c.a1 + c.a2));
    return {r, r};
}

double beta(const ChannelParams &params) {
    params.validate();
    if (beta_first_branch(params))
        return (1.0 - params.delta_d * params.delta_n) / (1.0 - params.delta_n);
    return 1.0 + params.delta_s;
}

bool beta_first_branch(const ChannelParams &params) {
    return params.delta_s <=
           params.delta_n * (1.0 - params.delta_d) / (1.0 - params.delta_n);
}

std::pair<double, double> delta_bars(const ChannelParams &params, double eta1,
                                     double eta2) {
    params.validate();
    AssociationSchedule::dynamic(eta1, eta2); // range check
    const double rest = 1.0 - eta1 - eta2;
    return {eta1 * params.delta_d + eta2 * params.delta_n + rest * params.delta_s,
            eta1 * params.delta_n + eta2 * params.delta_d + rest * params.delta_s};
}

DerivedParams derived_params(const ChannelParams &params, double eta1,
                             double eta2) {
    const auto [d1, d2] = delta_bars(params, eta1, eta2);
    return {beta(params), d1, d2, beta_first_branch(params)};
}

RateRegion outer_region(const ChannelParams &params, double eta1, double eta2) {
    const DerivedParams d = derived_params(params, eta1, eta2);
    return RateRegion{{{1.0, d.beta, d.beta * (1.0 - d.delta_bar_2)},
                       {d.beta, 1.0, d.beta * (1.0 - d.delta_bar_1)}}};
}

namespace {

// Shared form of the no-RIS / neutral regions with symmetric erasure prob d:
//   R1 + (1+d) R2 <= 1 - d^2,  (1+d) R1 + R2 <= 1 - d^2.
RateRegion homogeneous_region(double d) {
    const double bound = 1.0 - d * d;
    return RateRegion{{{1.0, 1.0 + d, bound}, {1.0 + d, 1.0, bound}}};
}

} // namespace

RateRegion no_ris_region(const ChannelParams &params) {
    params.validate();
    return homogeneous_region(params.delta_n);
}

RateRegion neutral_region(const ChannelParams &params) {
    params.validate();
    return homogeneous_region(params.delta_s);
}

RateRegion both_to_user_region(const ChannelParams &params, int user) {
    params.validate();
    if (user != 1 && user != 2)
        throw std::invalid_argument("both_to_user_region: user must be 1 or 2");
    const double bound = 1.0 - params.delta_d * params.delta_n;
    const double w_strong = bound / (1.0 - params.delta_d); // aided receiver
    const double w_weak = bound / (1.0 - params.delta_n);
    if (user == 1)
        return RateRegion{{{1.0, w_weak, bound}, {w_strong, 1.0, bound}}};
    return RateRegion{{{w_weak, 1.0, bound}, {1.0, w_strong, bound}}};
}

RateRegion dynamic_achievable_region(const ChannelParams &params, double eta) {
    const auto [dbar, dbar_same] = delta_bars(params, eta, eta);
    (void)dbar_same; // symmetric: both averages coincide
    const double w = (1.0 - params.delta_d * params.delta_n) /
                     (1.0 - params.delta_n);
    const double bound = w * (1.0 - dbar);
    return RateRegion{{{1.0, w, bound}, {w, 1.0, bound}}};
}

} // namespace risbec::regions
