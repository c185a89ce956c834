// Deterministic CSV/JSON renderers for the CLI-facing schemas. Output is
// locale-independent, '\n'-terminated, numbers at 9 significant digits in
// the CSV schemas.

#pragma once

#include <span>
#include <string>

#include "planner.hpp"
#include "protocol.hpp"

namespace risbec::io {

inline constexpr const char *kRegionsCsvHeader = "# risbec-regions-v1";
inline constexpr const char *kPlannerCsvHeader = "# risbec-planner-v1";
inline constexpr int kJsonSchemaVersion = 1;

// 9 significant digits, shortest form (printf %g semantics).
std::string fmt9(double v);

// scheme,kind,index,a1_or_r1,a2_or_r2,b for all six regions; vertex rows
// leave b empty. eta drives the dynamic rows, (eta1, eta2) the outer bound.
std::string regions_csv(const ChannelParams &params, double eta, double eta1,
                        double eta2);

// sweep_value,scheme,max_sum_rate,sym_r1,sym_r2,max_r1,max_r2,eta
std::string compare_csv(std::span<const planner::ComparisonRow> rows);
std::string sweep_csv(std::span<const planner::SweepPoint> points);

std::string simulation_json(const protocol::MonteCarloResult &mc);

} // namespace risbec::io
