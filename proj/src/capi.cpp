// extern-C surface of the shared library. C++ exceptions from the core are
// translated into rb_status codes plus a thread-local diagnostic string.

#include "risbec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "export.hpp"
#include "planner.hpp"
#include "protocol.hpp"
#include "regions.hpp"

using risbec::ChannelParams;

struct rb_region {
    risbec::regions::RateRegion region;
    std::vector<risbec::regions::Point> vertices;
};

struct rb_mc {
    risbec::protocol::MonteCarloResult result;
};

namespace {

thread_local std::string g_last_error;

rb_status fail(rb_status s, const char *msg) {
    g_last_error = msg;
    return s;
}

template <typename Fn>
rb_status wrap(Fn &&fn) {
    try {
        fn();
        return RB_OK;
    } catch (const std::bad_alloc &) {
        return fail(RB_ENOMEM, "out of memory");
    } catch (const std::logic_error &e) {
        return fail(RB_EINVAL, e.what());
    } catch (const std::exception &e) {
        return fail(RB_EINTERNAL, e.what());
    }
}

ChannelParams to_params(const rb_params *p) {
    return ChannelParams{p->delta_n, p->delta_s, p->delta_d};
}

rb_status require(bool ok, const char *msg) {
    return ok ? RB_OK : fail(RB_EINVAL, msg);
}

rb_status make_region(rb_region **out, risbec::regions::RateRegion region) {
    auto *r = new rb_region{std::move(region), {}};
    r->vertices = r->region.vertices();
    *out = r;
    return RB_OK;
}

char *dup_string(const std::string &s) {
    char *buf = static_cast<char *>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

risbec::protocol::ProtocolConfig to_protocol_config(const rb_sim_config *cfg) {
    risbec::protocol::ProtocolConfig pc;
    pc.params = to_params(&cfg->params);
    pc.n = cfg->n;
    if (cfg->eta > 0.0) pc.eta = cfg->eta;
    if (cfg->m > 0) pc.m = cfg->m;
    pc.payload_len = cfg->payload_len;
    pc.seed = cfg->seed;
    pc.chunk = cfg->chunk;
    return pc;
}

void fill_trial(const risbec::protocol::TrialResult &t, rb_trial *out) {
    out->slots_phase1 = t.slots_phase1;
    out->slots_phase2 = t.slots_phase2;
    out->slots_phase3 = t.slots_phase3;
    out->total_slots = t.total_slots;
    out->q1_len = t.q1_len;
    out->q2_len = t.q2_len;
    out->m = t.m1;
    out->sum_rate = t.sum_rate;
    out->realized_eta1 = t.realized_eta1;
    out->realized_eta2 = t.realized_eta2;
    out->decode_ok = t.decode_ok ? 1 : 0;
}

} // namespace

extern "C" {

const char *rb_version(void) { return "0.1.0"; }

const char *rb_status_str(rb_status status) {
    switch (status) {
    case RB_OK: return "ok";
    case RB_EINVAL: return "invalid argument";
    case RB_EDECODE: return "decode failure";
    case RB_ENOMEM: return "out of memory";
    case RB_EINTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *rb_last_error(void) { return g_last_error.c_str(); }

void rb_string_free(char *s) { std::free(s); }

rb_status rb_params_validate(const rb_params *p) {
    if (rb_status s = require(p != nullptr, "params is null"); s != RB_OK)
        return s;
    return wrap([&] { to_params(p).validate(); });
}

int rb_params_ris_ordered(const rb_params *p) {
    return p != nullptr && to_params(p).ris_ordered() ? 1 : 0;
}

rb_status rb_beta(const rb_params *p, double *beta, int *first_branch) {
    if (rb_status s = require(p && beta, "null argument"); s != RB_OK) return s;
    return wrap([&] {
        const ChannelParams cp = to_params(p);
        *beta = risbec::regions::beta(cp);
        if (first_branch)
            *first_branch = risbec::regions::beta_first_branch(cp) ? 1 : 0;
    });
}

rb_status rb_delta_bars(const rb_params *p, double eta1, double eta2,
                        double *dbar1, double *dbar2) {
    if (rb_status s = require(p && dbar1 && dbar2, "null argument"); s != RB_OK)
        return s;
    return wrap([&] {
        const auto [d1, d2] = risbec::regions::delta_bars(to_params(p), eta1, eta2);
        *dbar1 = d1;
        *dbar2 = d2;
    });
}

rb_status rb_optimal_eta(const rb_params *p, double *eta) {
    if (rb_status s = require(p && eta, "null argument"); s != RB_OK) return s;
    return wrap([&] { *eta = risbec::protocol::optimal_eta(to_params(p)); });
}

rb_status rb_region_outer(const rb_params *p, double eta1, double eta2,
                          rb_region **out) {
    if (rb_status s = require(p && out, "null argument"); s != RB_OK) return s;
    return wrap([&] {
        make_region(out, risbec::regions::outer_region(to_params(p), eta1, eta2));
    });
}

rb_status rb_region_no_ris(const rb_params *p, rb_region **out) {
    if (rb_status s = require(p && out, "null argument"); s != RB_OK) return s;
    return wrap(
        [&] { make_region(out, risbec::regions::no_ris_region(to_params(p))); });
}

rb_status rb_region_neutral(const rb_params *p, rb_region **out) {
    if (rb_status s = require(p && out, "null argument"); s != RB_OK) return s;
    return wrap(
        [&] { make_region(out, risbec::regions::neutral_region(to_params(p))); });
}

rb_status rb_region_both_to_user(const rb_params *p, int user, rb_region **out) {
    if (rb_status s = require(p && out, "null argument"); s != RB_OK) return s;
    return wrap([&] {
        make_region(out, risbec::regions::both_to_user_region(to_params(p), user));
    });
}

rb_status rb_region_dynamic_achievable(const rb_params *p, double eta,
                                       rb_region **out) {
    if (rb_status s = require(p && out, "null argument"); s != RB_OK) return s;
    return wrap([&] {
        make_region(out,
                    risbec::regions::dynamic_achievable_region(to_params(p), eta));
    });
}

void rb_region_free(rb_region *r) { delete r; }

size_t rb_region_constraint_count(const rb_region *r) {
    return r ? r->region.constraints().size() : 0;
}

rb_status rb_region_constraint(const rb_region *r, size_t index, double *a1,
                               double *a2, double *b) {
    if (rb_status s = require(r && a1 && a2 && b, "null argument"); s != RB_OK)
        return s;
    if (index >= r->region.constraints().size())
        return fail(RB_EINVAL, "constraint index out of range");
    const auto &c = r->region.constraints()[index];
    *a1 = c.a1;
    *a2 = c.a2;
    *b = c.b;
    return RB_OK;
}

size_t rb_region_vertex_count(const rb_region *r) {
    return r ? r->vertices.size() : 0;
}

rb_status rb_region_vertex(const rb_region *r, size_t index, double *r1,
                           double *r2) {
    if (rb_status s = require(r && r1 && r2, "null argument"); s != RB_OK)
        return s;
    if (index >= r->vertices.size())
        return fail(RB_EINVAL, "vertex index out of range");
    *r1 = r->vertices[index].r1;
    *r2 = r->vertices[index].r2;
    return RB_OK;
}

int rb_region_contains(const rb_region *r, double r1, double r2) {
    return r && r->region.contains({r1, r2}) ? 1 : 0;
}

rb_status rb_region_max_weighted(const rb_region *r, double w1, double w2,
                                 double *r1, double *r2) {
    if (rb_status s = require(r && r1 && r2, "null argument"); s != RB_OK)
        return s;
    return wrap([&] {
        const auto p = r->region.max_weighted(w1, w2);
        *r1 = p.r1;
        *r2 = p.r2;
    });
}

rb_status rb_region_max_sum_rate(const rb_region *r, double *r1, double *r2,
                                 double *value) {
    if (rb_status s = require(r && r1 && r2 && value, "null argument");
        s != RB_OK)
        return s;
    return wrap([&] {
        const auto [p, v] = r->region.max_sum_rate();
        *r1 = p.r1;
        *r2 = p.r2;
        *value = v;
    });
}

rb_status rb_region_symmetric_point(const rb_region *r, double *rate) {
    if (rb_status s = require(r && rate, "null argument"); s != RB_OK) return s;
    return wrap([&] { *rate = r->region.symmetric_point().r1; });
}

void rb_sim_config_init(rb_sim_config *cfg) {
    if (!cfg) return;
    cfg->params = rb_params{0.0, 0.0, 0.0}; // caller must set
    cfg->eta = 0.0;
    cfg->n = 200000;
    cfg->m = 0;
    cfg->payload_len = 64;
    cfg->seed = 1;
    cfg->chunk = 0;
    cfg->threads = 0;
}

rb_status rb_simulate(const rb_sim_config *cfg, rb_trial *out) {
    if (rb_status s = require(cfg && out, "null argument"); s != RB_OK)
        return s;
    return wrap([&] {
        const auto t = risbec::protocol::simulate(to_protocol_config(cfg));
        fill_trial(t, out);
    });
}

rb_status rb_monte_carlo(const rb_sim_config *cfg, uint32_t trials,
                         rb_mc **out) {
    if (rb_status s = require(cfg && out, "null argument"); s != RB_OK)
        return s;
    return wrap([&] {
        auto *mc = new rb_mc{risbec::protocol::monte_carlo(
            to_protocol_config(cfg), trials, cfg->threads)};
        *out = mc;
    });
}

void rb_mc_free(rb_mc *mc) { delete mc; }

uint32_t rb_mc_trial_count(const rb_mc *mc) {
    return mc ? static_cast<uint32_t>(mc->result.trials.size()) : 0;
}

rb_status rb_mc_trial(const rb_mc *mc, uint32_t index, rb_trial *out) {
    if (rb_status s = require(mc && out, "null argument"); s != RB_OK) return s;
    if (index >= mc->result.trials.size())
        return fail(RB_EINVAL, "trial index out of range");
    fill_trial(mc->result.trials[index], out);
    return RB_OK;
}

rb_status rb_mc_stats(const rb_mc *mc, double *mean_sum_rate,
                      double *std_sum_rate, double *mean_eta1,
                      double *mean_eta2) {
    if (rb_status s = require(mc != nullptr, "mc is null"); s != RB_OK)
        return s;
    if (mean_sum_rate) *mean_sum_rate = mc->result.mean_sum_rate;
    if (std_sum_rate) *std_sum_rate = mc->result.std_sum_rate;
    if (mean_eta1) *mean_eta1 = mc->result.mean_eta1;
    if (mean_eta2) *mean_eta2 = mc->result.mean_eta2;
    return RB_OK;
}

uint32_t rb_mc_decode_failures(const rb_mc *mc) {
    return mc ? mc->result.decode_failures : 0;
}

rb_status rb_mc_json(const rb_mc *mc, char **out_json) {
    if (rb_status s = require(mc && out_json, "null argument"); s != RB_OK)
        return s;
    return wrap(
        [&] { *out_json = dup_string(risbec::io::simulation_json(mc->result)); });
}

rb_status rb_regions_csv(const rb_params *p, double eta, double eta1,
                         double eta2, char **out_csv) {
    if (rb_status s = require(p && out_csv, "null argument"); s != RB_OK)
        return s;
    return wrap([&] {
        const ChannelParams cp = to_params(p);
        const double e = eta > 0.0 ? eta : risbec::protocol::optimal_eta(cp);
        const double e1 = eta1 > 0.0 ? eta1 : e;
        const double e2 = eta2 > 0.0 ? eta2 : e;
        *out_csv = dup_string(risbec::io::regions_csv(cp, e, e1, e2));
    });
}

rb_status rb_compare_csv(const rb_params *p, double eta, char **out_csv) {
    if (rb_status s = require(p && out_csv, "null argument"); s != RB_OK)
        return s;
    return wrap([&] {
        const ChannelParams cp = to_params(p);
        std::optional<double> e;
        if (eta > 0.0) e = eta;
        const auto rows = risbec::planner::compare_all(cp, e);
        *out_csv = dup_string(risbec::io::compare_csv(rows));
    });
}

rb_status rb_sweep_csv(const rb_params *p, const char *param, double from,
                       double to, uint32_t steps, double eta, char **out_csv) {
    if (rb_status s = require(p && param && out_csv, "null argument");
        s != RB_OK)
        return s;
    const auto sp = risbec::planner::parse_sweep_param(param);
    if (!sp)
        return fail(RB_EINVAL,
                    "param must be one of delta_n, delta_s, delta_d, eta");
    return wrap([&] {
        std::optional<double> e;
        if (eta > 0.0) e = eta;
        const auto points =
            risbec::planner::sweep(to_params(p), *sp, from, to, steps, e);
        *out_csv = dup_string(risbec::io::sweep_csv(points));
    });
}

rb_status rb_best_schedule(const rb_params *p, rb_objective objective,
                           double w1, double w2, double eta, char *scheme_buf,
                           size_t scheme_buf_len, double *eta_used,
                           int *has_eta, double *value) {
    if (rb_status s = require(p && scheme_buf && value, "null argument");
        s != RB_OK)
        return s;
    return wrap([&] {
        risbec::planner::Objective obj;
        obj.weighted = objective == RB_OBJECTIVE_WEIGHTED;
        obj.w1 = w1;
        obj.w2 = w2;
        std::optional<double> e;
        if (eta > 0.0) e = eta;
        const auto best = risbec::planner::best_schedule(to_params(p), obj, e);
        if (best.scheme.size() + 1 > scheme_buf_len)
            throw std::invalid_argument("scheme buffer too small");
        std::memcpy(scheme_buf, best.scheme.c_str(), best.scheme.size() + 1);
        if (eta_used) *eta_used = best.eta.value_or(0.0);
        if (has_eta) *has_eta = best.eta ? 1 : 0;
        *value = best.value;
    });
}

} // extern "C"
