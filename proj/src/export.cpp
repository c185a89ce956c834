#include "export.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace risbec::io {

std::string fmt9(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

namespace {

void append_region(std::string &out, const std::string &scheme,
                   const regions::RateRegion &region) {
    std::size_t index = 0;
    for (const auto &c : region.constraints()) {
        out += scheme;
        out += ",constraint,";
        out += std::to_string(index++);
        out += ',';
        out += fmt9(c.a1);
        out += ',';
        out += fmt9(c.a2);
        out += ',';
        out += fmt9(c.b);
        out += '\n';
    }
    index = 0;
    for (const auto &v : region.vertices()) {
        out += scheme;
        out += ",vertex,";
        out += std::to_string(index++);
        out += ',';
        out += fmt9(v.r1);
        out += ',';
        out += fmt9(v.r2);
        out += ",\n";
    }
}

void append_row(std::string &out, const std::string &sweep_value,
                const planner::ComparisonRow &row) {
    out += sweep_value;
    out += ',';
    out += row.scheme;
    out += ',';
    out += fmt9(row.max_sum_rate);
    out += ',';
    out += fmt9(row.sym_r1);
    out += ',';
    out += fmt9(row.sym_r2);
    out += ',';
    out += fmt9(row.max_r1);
    out += ',';
    out += fmt9(row.max_r2);
    out += ',';
    if (row.eta) out += fmt9(*row.eta);
    out += '\n';
}

constexpr const char *kPlannerColumns =
    "sweep_value,scheme,max_sum_rate,sym_r1,sym_r2,max_r1,max_r2,eta\n";

} // namespace

std::string regions_csv(const ChannelParams &params, double eta, double eta1,
                        double eta2) {
    std::string out = kRegionsCsvHeader;
    out += "\nscheme,kind,index,a1_or_r1,a2_or_r2,b\n";
    append_region(out, "no_ris", regions::no_ris_region(params));
    append_region(out, "neutral", regions::neutral_region(params));
    append_region(out, "both_to_user1", regions::both_to_user_region(params, 1));
    append_region(out, "both_to_user2", regions::both_to_user_region(params, 2));
    append_region(out, "dynamic_outer",
                  regions::outer_region(params, eta1, eta2));
    append_region(out, "dynamic_achievable",
                  regions::dynamic_achievable_region(params, eta));
    return out;
}

std::string compare_csv(std::span<const planner::ComparisonRow> rows) {
    std::string out = kPlannerCsvHeader;
    out += '\n';
    out += kPlannerColumns;
    for (const auto &row : rows) append_row(out, "", row);
    return out;
}

std::string sweep_csv(std::span<const planner::SweepPoint> points) {
    std::string out = kPlannerCsvHeader;
    out += '\n';
    out += kPlannerColumns;
    for (const auto &point : points)
        for (const auto &row : point.rows)
            append_row(out, fmt9(point.value), row);
    return out;
}

std::string simulation_json(const protocol::MonteCarloResult &mc) {
    nlohmann::ordered_json j;
    j["schema_version"] = kJsonSchemaVersion;
    j["params"] = {{"delta_n", mc.config.params.delta_n},
                   {"delta_s", mc.config.params.delta_s},
                   {"delta_d", mc.config.params.delta_d}};
    j["eta"] = mc.config.eta1;
    j["n"] = mc.config.n;
    j["m"] = mc.config.m1;
    j["trials"] = mc.trials.size();
    auto per_trial = nlohmann::ordered_json::array();
    for (const auto &t : mc.trials) {
        per_trial.push_back({{"slots_phase1", t.slots_phase1},
                             {"slots_phase2", t.slots_phase2},
                             {"slots_phase3", t.slots_phase3},
                             {"total_slots", t.total_slots},
                             {"sum_rate", t.sum_rate},
                             {"decode_ok", t.decode_ok}});
    }
    j["per_trial"] = std::move(per_trial);
    j["mean_sum_rate"] = mc.mean_sum_rate;
    j["std_sum_rate"] = mc.std_sum_rate;
    j["mean_eta1"] = mc.mean_eta1;
    j["mean_eta2"] = mc.mean_eta2;
    return j.dump(2) + "\n";
}

} // namespace risbec::io
