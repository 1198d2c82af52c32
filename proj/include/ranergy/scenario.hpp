#pragma once

#include <span>
#include <vector>

#include "ranergy/config.hpp"
#include "ranergy/xhaul.hpp"

namespace ranergy {

// The four deployment scenarios, fixed to their BBP placement.
enum class ScenarioId : int { S1 = 0, S2 = 1, S3 = 2, S4 = 3 };

inline constexpr std::array<ScenarioId, 4> all_scenarios{
    ScenarioId::S1, ScenarioId::S2, ScenarioId::S3, ScenarioId::S4};

const char* to_string(ScenarioId id);
ScenarioId scenario_from_string(const std::string& s);

// S1 -> RU, S2 -> DU, S3 -> CU, S4 -> DC.
NodalUnit bbp_location(ScenarioId id);

// DUs provisioned for n_ru radio units: ceil(n_ru / fanout).
int du_count(int n_ru, int fanout = 4);

// Server deployment at the BBP tier of one evaluation point.
struct ServerDeployment {
    NodalUnit unit = NodalUnit::RU;
    int instances = 0;            // deployed units at the tier
    int servers_per_instance = 0; // integral complement per instance
    double provisioned_bps = 0.0; // instances * complement * server capacity

    int total_servers() const { return instances * servers_per_instance; }
};

// Everything needed to evaluate one (scenario, n_ru) point: unit counts, the
// BBP deployment, per-unit pre/post flags and the coverage multipliers the
// rho-hook feeds into the pre-BBP gammas.
struct EvalPlan {
    ScenarioId scenario = ScenarioId::S1;
    int n_ru = 1;
    int n_du = 1;
    int n_cu = 2;
    int n_dc = 1;
    TrafficModel traffic;               // live c_u / c_n
    ServerDeployment deployment;
    std::array<bool, 4> pre_bbp{};      // unit precedes the BBP location
    std::array<double, 4> unit_coverage{};   // deployed / baseline per unit
    std::array<double, 3> segment_coverage{}; // per haul segment
};

EvalPlan build(ScenarioId scenario, int n_ru, const RunConfig& config);

EnergyBreakdown evaluate(const EvalPlan& plan, const RunConfig& config);

struct SweepPoint {
    int n_ru = 0;
    int n_du = 0;
    int n_cu = 0;
    int n_dc = 0;
    double users = 0;
    // one breakdown per requested scenario, in request order
    std::vector<std::pair<ScenarioId, EnergyBreakdown>> breakdowns;
};

// One point per n_ru in [n_ru_min, n_ru_max], scenarios evaluated per point.
// Output is deterministic: ordered by (n_ru, scenario id), values independent
// of evaluation strategy.
std::vector<SweepPoint> sweep(std::span<const ScenarioId> scenarios, const RunConfig& config);

} // namespace ranergy
