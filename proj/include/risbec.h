/* risbec -- rate regions and protocol simulation for the two-user
 * double-RIS-aided erasure broadcast network.
 *
 * C API of the shared library. All functions return rb_status unless the
 * result is trivially infallible; on failure rb_last_error() carries a
 * one-line diagnostic (thread-local, valid until the next failing call on
 * the same thread). Opaque handles are created by rb_*_create-style
 * constructors and released with the matching rb_*_free.
 */

#ifndef RISBEC_H
#define RISBEC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rb_status {
    RB_OK = 0,
    RB_EINVAL = 1,   /* invalid argument / precondition violation */
    RB_EDECODE = 2,  /* a simulation trial failed to decode (bug signal) */
    RB_ENOMEM = 3,
    RB_EINTERNAL = 4
} rb_status;

const char *rb_version(void);
const char *rb_status_str(rb_status status);
const char *rb_last_error(void);

/* Frees strings returned through char** out-parameters. */
void rb_string_free(char *s);

/* ------------------------------------------------------------------ */
/* Channel parameters                                                  */
/* ------------------------------------------------------------------ */

/* Per-slot erasure probabilities by RIS aid level: none / single / double.
 * Each must lie strictly in (0, 1). */
typedef struct rb_params {
    double delta_n;
    double delta_s;
    double delta_d;
} rb_params;

rb_status rb_params_validate(const rb_params *p);

/* 1 if delta_d <= delta_s <= delta_n (more RIS aid never hurts), else 0.
 * Violations are legal inputs; callers may want to warn. */
int rb_params_ris_ordered(const rb_params *p);

/* Outer-bound weight. first_branch (optional, may be NULL) reports whether
 * delta_s <= delta_n*(1-delta_d)/(1-delta_n). */
rb_status rb_beta(const rb_params *p, double *beta, int *first_branch);

/* Time-averaged erasure probabilities of the dynamic association with
 * phase fractions eta1, eta2 in (0, 1/2). */
rb_status rb_delta_bars(const rb_params *p, double eta1, double eta2,
                        double *dbar1, double *dbar2);

/* Phase fraction that balances the three protocol phases:
 * (1-delta_s) / (2(1-delta_s) + delta_d(1-delta_n)). */
rb_status rb_optimal_eta(const rb_params *p, double *eta);

/* ------------------------------------------------------------------ */
/* Rate regions                                                        */
/* ------------------------------------------------------------------ */

/* A bounded convex polygon in (R1, R2), stored as half-plane constraints
 * a1*R1 + a2*R2 <= b (plus implicit R1, R2 >= 0). */
typedef struct rb_region rb_region;

rb_status rb_region_outer(const rb_params *p, double eta1, double eta2,
                          rb_region **out);
rb_status rb_region_no_ris(const rb_params *p, rb_region **out);
rb_status rb_region_neutral(const rb_params *p, rb_region **out);
rb_status rb_region_both_to_user(const rb_params *p, int user, rb_region **out);
rb_status rb_region_dynamic_achievable(const rb_params *p, double eta,
                                       rb_region **out);
void rb_region_free(rb_region *r);

size_t rb_region_constraint_count(const rb_region *r);
rb_status rb_region_constraint(const rb_region *r, size_t index,
                               double *a1, double *a2, double *b);

/* Vertices in counterclockwise order starting at the origin. */
size_t rb_region_vertex_count(const rb_region *r);
rb_status rb_region_vertex(const rb_region *r, size_t index,
                           double *r1, double *r2);

int rb_region_contains(const rb_region *r, double r1, double r2);
rb_status rb_region_max_weighted(const rb_region *r, double w1, double w2,
                                 double *r1, double *r2);
rb_status rb_region_max_sum_rate(const rb_region *r, double *r1, double *r2,
                                 double *value);
/* Boundary point with R1 = R2; writes the common coordinate. */
rb_status rb_region_symmetric_point(const rb_region *r, double *rate);

/* ------------------------------------------------------------------ */
/* Protocol simulation                                                 */
/* ------------------------------------------------------------------ */

typedef struct rb_sim_config {
    rb_params params;
    double eta;           /* phase fraction; <= 0 selects the optimal value */
    uint64_t n;           /* nominal block length in slots */
    uint64_t m;           /* packets per user; 0 derives floor((1-dd*dn)*eta*n) */
    uint32_t payload_len; /* bytes per packet */
    uint64_t seed;        /* master seed; trials derive independent streams */
    uint32_t chunk;       /* phase-3 generation cap; 0 selects the default */
    uint32_t threads;     /* worker threads for monte carlo; 0 = hardware */
} rb_sim_config;

/* Fills defaults: n=200000, eta/m/chunk/threads auto, payload_len=64, seed=1. */
void rb_sim_config_init(rb_sim_config *cfg);

typedef struct rb_trial {
    uint64_t slots_phase1;
    uint64_t slots_phase2;
    uint64_t slots_phase3;
    uint64_t total_slots;
    uint64_t q1_len;      /* virtual-queue sizes at the end of phases 1/2 */
    uint64_t q2_len;
    uint64_t m;           /* packets delivered per user */
    double sum_rate;      /* 2m / total_slots */
    double realized_eta1; /* slots_phase1 / n */
    double realized_eta2; /* slots_phase2 / n */
    int decode_ok;        /* both receivers hold their m packets bit-exactly */
} rb_trial;

/* Runs a single trial (trial index 0 of the given seed). */
rb_status rb_simulate(const rb_sim_config *cfg, rb_trial *out);

typedef struct rb_mc rb_mc;

rb_status rb_monte_carlo(const rb_sim_config *cfg, uint32_t trials, rb_mc **out);
void rb_mc_free(rb_mc *mc);
uint32_t rb_mc_trial_count(const rb_mc *mc);
rb_status rb_mc_trial(const rb_mc *mc, uint32_t index, rb_trial *out);
rb_status rb_mc_stats(const rb_mc *mc, double *mean_sum_rate,
                      double *std_sum_rate, double *mean_eta1,
                      double *mean_eta2);
uint32_t rb_mc_decode_failures(const rb_mc *mc);
/* Renders the simulation-result JSON document (schema_version 1). */
rb_status rb_mc_json(const rb_mc *mc, char **out_json);

/* ------------------------------------------------------------------ */
/* Planner and exports                                                 */
/* ------------------------------------------------------------------ */

typedef enum rb_objective {
    RB_OBJECTIVE_SUM = 0,
    RB_OBJECTIVE_WEIGHTED = 1
} rb_objective;

/* Region export CSV for all six regions at the given parameters.
 * eta: fraction for the dynamic rows (<= 0 selects the optimal value).
 * eta1, eta2: outer-bound fractions (<= 0 reuses eta). */
rb_status rb_regions_csv(const rb_params *p, double eta, double eta1,
                         double eta2, char **out_csv);

/* Scheme comparison at one parameter point (planner CSV, empty sweep_value). */
rb_status rb_compare_csv(const rb_params *p, double eta, char **out_csv);

/* Sweeps one of {delta_n, delta_s, delta_d, eta} over an inclusive grid. */
rb_status rb_sweep_csv(const rb_params *p, const char *param, double from,
                       double to, uint32_t steps, double eta, char **out_csv);

/* Best scheme within the implemented association family. scheme_buf receives
 * one of {no_ris, neutral, both_to_user1, both_to_user2, dynamic}; *has_eta
 * is 1 when the winner is dynamic and *eta_used carries its fraction. */
rb_status rb_best_schedule(const rb_params *p, rb_objective objective,
                           double w1, double w2, double eta,
                           char *scheme_buf, size_t scheme_buf_len,
                           double *eta_used, int *has_eta, double *value);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RISBEC_H */
