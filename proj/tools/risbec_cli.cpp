// Command-line front end. Links the shared library through the C API only.
//
// Subcommands: regions, simulate, compare, optimize, sweep. All output is
// deterministic for a fixed invocation; exit codes are 0 on success, 2 on
// invalid input, 3 when any simulation trial fails to decode.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "risbec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDecodeFailure = 3;

struct StringGuard {
    char *s = nullptr;
    ~StringGuard() { rb_string_free(s); }
};

const CLI::Validator open_unit_interval(
    [](std::string &value) -> std::string {
        const double v = std::stod(value);
        if (!(v > 0.0 && v < 1.0)) return "value must lie strictly in (0, 1)";
        return {};
    },
    "FLOAT in (0,1)");

const CLI::Validator open_half_interval(
    [](std::string &value) -> std::string {
        const double v = std::stod(value);
        if (!(v > 0.0 && v < 0.5)) return "value must lie strictly in (0, 1/2)";
        return {};
    },
    "FLOAT in (0,1/2)");

struct CommonOpts {
    rb_params params{};
    double eta = 0.0; // 0 = optimal
    std::string out;
    std::string format;
};

void add_param_flags(CLI::App *cmd, CommonOpts &o) {
    cmd->add_option("--delta-n", o.params.delta_n,
                    "Erasure probability with no RIS aid")
        ->required()
        ->check(open_unit_interval);
    cmd->add_option("--delta-s", o.params.delta_s,
                    "Erasure probability with single RIS aid")
        ->required()
        ->check(open_unit_interval);
    cmd->add_option("--delta-d", o.params.delta_d,
                    "Erasure probability with double RIS aid")
        ->required()
        ->check(open_unit_interval);
}

void warn_if_unordered(const rb_params &p) {
    if (!rb_params_ris_ordered(&p))
        std::cerr << "warning: delta_d <= delta_s <= delta_n does not hold; "
                     "more RIS aid should not worsen a link\n";
}

int write_output(const std::string &out_path, const char *data) {
    if (out_path.empty()) {
        std::cout << data;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    f << data;
    if (!f) {
        std::cerr << "error: cannot write --out file '" << out_path << "'\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int check_format(const std::string &format, const char *expected,
                 const char *subcommand) {
    if (format != expected) {
        std::cerr << "error: --format " << format << " is not supported by "
                  << subcommand << " (only " << expected << ")\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int api_fail(rb_status status) {
    std::cerr << "error: " << rb_last_error() << "\n";
    return status == RB_EINVAL ? kExitInvalid : 1;
}

// --objective sum | weighted:W1,W2
bool parse_objective(const std::string &text, rb_objective &obj, double &w1,
                     double &w2) {
    if (text == "sum") {
        obj = RB_OBJECTIVE_SUM;
        return true;
    }
    if (text.rfind("weighted:", 0) == 0) {
        obj = RB_OBJECTIVE_WEIGHTED;
        return std::sscanf(text.c_str() + 9, "%lf,%lf", &w1, &w2) == 2;
    }
    return false;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rate regions and protocol simulation for the two-user "
                 "double-RIS erasure broadcast network"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rb_version()));

    // regions
    CommonOpts reg;
    double reg_eta1 = 0.0, reg_eta2 = 0.0;
    auto *cmd_regions = app.add_subcommand(
        "regions", "Export constraints and vertices of all six rate regions");
    add_param_flags(cmd_regions, reg);
    cmd_regions->add_option("--eta", reg.eta, "Dynamic phase fraction (default: optimal)")
        ->check(open_half_interval);
    cmd_regions->add_option("--eta1", reg_eta1, "Outer-bound fraction for user 1")
        ->check(open_half_interval);
    cmd_regions->add_option("--eta2", reg_eta2, "Outer-bound fraction for user 2")
        ->check(open_half_interval);
    cmd_regions->add_option("--out", reg.out, "Output file (default: stdout)");
    cmd_regions->add_option("--format", reg.format, "Output format")
        ->default_val("csv");

    // simulate
    CommonOpts sim;
    std::uint64_t sim_n = 200000, sim_seed = 1, sim_m = 0;
    std::uint32_t sim_trials = 20, sim_payload = 64, sim_threads = 0;
    auto *cmd_simulate = app.add_subcommand(
        "simulate", "Monte Carlo runs of the three-phase protocol");
    add_param_flags(cmd_simulate, sim);
    cmd_simulate->add_option("--eta", sim.eta, "Phase fraction (default: optimal)")
        ->check(open_half_interval);
    cmd_simulate->add_option("--n", sim_n, "Nominal block length in slots")
        ->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--m", sim_m, "Packets per user (default: derived)");
    cmd_simulate->add_option("--trials", sim_trials, "Number of trials")
        ->check(CLI::PositiveNumber)
        ->default_val(20);
    cmd_simulate->add_option("--seed", sim_seed, "Master seed")->default_val(1);
    cmd_simulate->add_option("--payload-len", sim_payload, "Packet payload bytes")
        ->check(CLI::PositiveNumber)
        ->default_val(64);
    cmd_simulate->add_option("--threads", sim_threads,
                             "Worker threads (default: available parallelism)");
    cmd_simulate->add_option("--out", sim.out, "Output file (default: stdout)");
    cmd_simulate->add_option("--format", sim.format, "Output format")
        ->default_val("json");

    // compare
    CommonOpts cmp;
    auto *cmd_compare = app.add_subcommand(
        "compare", "Compare all association schemes at one parameter point");
    add_param_flags(cmd_compare, cmp);
    cmd_compare->add_option("--eta", cmp.eta, "Dynamic phase fraction (default: optimal)")
        ->check(open_half_interval);
    cmd_compare->add_option("--out", cmp.out, "Output file (default: stdout)");
    cmd_compare->add_option("--format", cmp.format, "Output format")
        ->default_val("csv");

    // optimize
    CommonOpts opt;
    std::string opt_objective = "sum";
    auto *cmd_optimize = app.add_subcommand(
        "optimize", "Best scheme within the association family");
    add_param_flags(cmd_optimize, opt);
    cmd_optimize->add_option("--eta", opt.eta, "Dynamic phase fraction (default: optimal)")
        ->check(open_half_interval);
    cmd_optimize->add_option("--objective", opt_objective,
                             "sum or weighted:W1,W2")
        ->default_val("sum");
    cmd_optimize->add_option("--out", opt.out,
                             "Also write the comparison CSV to this file");
    cmd_optimize->add_option("--format", opt.format, "Output format")
        ->default_val("csv");

    // sweep
    CommonOpts swp;
    std::string swp_param;
    double swp_from = 0.0, swp_to = 0.0;
    std::uint32_t swp_steps = 0;
    auto *cmd_sweep = app.add_subcommand(
        "sweep", "Sweep one parameter over an inclusive grid");
    add_param_flags(cmd_sweep, swp);
    cmd_sweep->add_option("--param", swp_param,
                          "One of delta_n, delta_s, delta_d, eta")
        ->required();
    cmd_sweep->add_option("--from", swp_from, "Grid start")->required();
    cmd_sweep->add_option("--to", swp_to, "Grid end")->required();
    cmd_sweep->add_option("--steps", swp_steps, "Grid points (>= 2)")->required();
    cmd_sweep->add_option("--eta", swp.eta,
                          "Fixed dynamic fraction (default: optimal per point)")
        ->check(open_half_interval);
    cmd_sweep->add_option("--out", swp.out, "Output file (default: stdout)");
    cmd_sweep->add_option("--format", swp.format, "Output format")
        ->default_val("csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    if (cmd_regions->parsed()) {
        if (int rc = check_format(reg.format, "csv", "regions")) return rc;
        warn_if_unordered(reg.params);
        StringGuard csv;
        if (rb_status s = rb_regions_csv(&reg.params, reg.eta, reg_eta1,
                                         reg_eta2, &csv.s);
            s != RB_OK)
            return api_fail(s);
        return write_output(reg.out, csv.s);
    }

    if (cmd_simulate->parsed()) {
        if (int rc = check_format(sim.format, "json", "simulate")) return rc;
        warn_if_unordered(sim.params);
        rb_sim_config cfg;
        rb_sim_config_init(&cfg);
        cfg.params = sim.params;
        cfg.eta = sim.eta;
        cfg.n = sim_n;
        cfg.m = sim_m;
        cfg.payload_len = sim_payload;
        cfg.seed = sim_seed;
        cfg.threads = sim_threads;
        rb_mc *mc = nullptr;
        if (rb_status s = rb_monte_carlo(&cfg, sim_trials, &mc); s != RB_OK)
            return api_fail(s);
        std::unique_ptr<rb_mc, decltype(&rb_mc_free)> guard(mc, rb_mc_free);
        StringGuard json;
        if (rb_status s = rb_mc_json(mc, &json.s); s != RB_OK)
            return api_fail(s);
        if (int rc = write_output(sim.out, json.s)) return rc;
        if (rb_mc_decode_failures(mc) > 0) {
            std::cerr << "error: " << rb_mc_decode_failures(mc)
                      << " trial(s) failed to decode\n";
            return kExitDecodeFailure;
        }
        return kExitOk;
    }

    if (cmd_compare->parsed()) {
        if (int rc = check_format(cmp.format, "csv", "compare")) return rc;
        warn_if_unordered(cmp.params);
        StringGuard csv;
        if (rb_status s = rb_compare_csv(&cmp.params, cmp.eta, &csv.s);
            s != RB_OK)
            return api_fail(s);
        return write_output(cmp.out, csv.s);
    }

    if (cmd_optimize->parsed()) {
        if (int rc = check_format(opt.format, "csv", "optimize")) return rc;
        warn_if_unordered(opt.params);
        rb_objective obj = RB_OBJECTIVE_SUM;
        double w1 = 1.0, w2 = 1.0;
        if (!parse_objective(opt_objective, obj, w1, w2)) {
            std::cerr << "error: --objective must be sum or weighted:W1,W2\n";
            return kExitInvalid;
        }
        char scheme[32];
        double eta_used = 0.0, value = 0.0;
        int has_eta = 0;
        if (rb_status s =
                rb_best_schedule(&opt.params, obj, w1, w2, opt.eta, scheme,
                                 sizeof(scheme), &eta_used, &has_eta, &value);
            s != RB_OK)
            return api_fail(s);
        char line[128];
        const char *label = obj == RB_OBJECTIVE_SUM ? "sum_rate" : "value";
        if (has_eta)
            std::snprintf(line, sizeof(line), "%s eta=%.6f %s=%.6f\n", scheme,
                          eta_used, label, value);
        else
            std::snprintf(line, sizeof(line), "%s %s=%.6f\n", scheme, label,
                          value);
        std::cout << line;
        if (!opt.out.empty()) {
            StringGuard csv;
            if (rb_status s = rb_compare_csv(&opt.params, opt.eta, &csv.s);
                s != RB_OK)
                return api_fail(s);
            return write_output(opt.out, csv.s);
        }
        return kExitOk;
    }

    if (cmd_sweep->parsed()) {
        if (int rc = check_format(swp.format, "csv", "sweep")) return rc;
        warn_if_unordered(swp.params);
        StringGuard csv;
        if (rb_status s = rb_sweep_csv(&swp.params, swp_param.c_str(), swp_from,
                                       swp_to, swp_steps, swp.eta, &csv.s);
            s != RB_OK)
            return api_fail(s);
        return write_output(swp.out, csv.s);
    }

    return kExitInvalid;
}
