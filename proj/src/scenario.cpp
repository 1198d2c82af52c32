#include "ranergy/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ranergy/errors.hpp"
#include "ranergy/units.hpp"

namespace ranergy {

const char* to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::S1: return "S1";
        case ScenarioId::S2: return "S2";
        case ScenarioId::S3: return "S3";
        case ScenarioId::S4: return "S4";
    }
    return "?";
}

ScenarioId scenario_from_string(const std::string& s) {
    for (ScenarioId id : all_scenarios) {
        if (s == to_string(id)) return id;
    }
    throw SchemaError("unknown scenario '" + s + "' (expected S1..S4)");
}

NodalUnit bbp_location(ScenarioId id) {
    switch (id) {
        case ScenarioId::S1: return NodalUnit::RU;
        case ScenarioId::S2: return NodalUnit::DU;
        case ScenarioId::S3: return NodalUnit::CU;
        case ScenarioId::S4: return NodalUnit::DC;
    }
    throw DomainError("unknown scenario id");
}

int du_count(int n_ru, int fanout) {
    if (n_ru < 1) throw DomainError("du_count: n_ru must be >= 1");
    if (fanout < 1) throw ValidationError("du_count: fanout must be >= 1");
    return (n_ru + fanout - 1) / fanout;
}

namespace {

// Integral server complement for a per-instance capacity requirement; a
// deployed instance hosts at least one server. Demands an epsilon under an
// integer boundary snap down so capacity arithmetic stays stable against
// floating-point noise.
int server_complement(double required_bps, double server_capacity_bps) {
    const double ratio = required_bps / server_capacity_bps;
    const double snapped = std::ceil(ratio - 1e-9);
    return std::max(1, static_cast<int>(snapped));
}

int unit_instances(NodalUnit u, int n_ru, const SweepSettings& sweep) {
    switch (u) {
        case NodalUnit::RU: return n_ru;
        case NodalUnit::DU: return du_count(n_ru, sweep.du_fanout);
        case NodalUnit::CU: return sweep.n_cu;
        case NodalUnit::DC: return sweep.n_dc;
    }
    throw DomainError("unknown nodal unit");
}

} // namespace

EvalPlan build(ScenarioId scenario, int n_ru, const RunConfig& config) {
    if (n_ru < 1) throw DomainError("build: n_ru must be >= 1");

    EvalPlan plan;
    plan.scenario = scenario;
    plan.n_ru = n_ru;
    plan.n_du = du_count(n_ru, config.sweep.du_fanout);
    plan.n_cu = config.sweep.n_cu;
    plan.n_dc = config.sweep.n_dc;
    plan.traffic = make_traffic(config.traffic.users, config.traffic.monthly_gb_per_user, n_ru,
                                units::gbps_to_bps(config.traffic.ecpri_rate_per_ru_gbps));

    const NodalUnit bbp = bbp_location(scenario);
    const std::size_t bbp_idx = unit_index(bbp);

    // Server placement at the BBP tier. Each instance hosts an integral
    // complement covering its provisioning rule: reserved fronthaul capacity
    // plus, for pooled tiers, its share of the live eCPRI demand.
    const UnitParams& bbp_unit = config.units[bbp_idx];
    if (!bbp_unit.server) {
        throw ValidationError(std::string("scenario ") + to_string(scenario) + ": unit " +
                              to_string(bbp) + " has no server configured");
    }
    const ProvisionRule& rule = config.provisioning[bbp_idx];
    const int instances = unit_instances(bbp, n_ru, config.sweep);
    double per_instance_bps = units::gbps_to_bps(rule.fixed_gbps);
    if (rule.track_demand) {
        per_instance_bps += plan.traffic.ecpri_traffic_bps / instances;
    }
    if (!(per_instance_bps > 0.0)) {
        throw ValidationError(std::string("scenario ") + to_string(scenario) +
                              ": provisioning rule at " + to_string(bbp) +
                              " yields no capacity requirement");
    }
    plan.deployment.unit = bbp;
    plan.deployment.instances = instances;
    plan.deployment.servers_per_instance =
        server_complement(per_instance_bps, bbp_unit.server->bbp_capacity_bps);
    plan.deployment.provisioned_bps = static_cast<double>(plan.deployment.total_servers()) *
                                      bbp_unit.server->bbp_capacity_bps;

    // Pre/post marking along the uplink order decides which equipment and
    // segments still carry the expanded eCPRI stream.
    for (NodalUnit u : all_units) {
        plan.pre_bbp[unit_index(u)] = unit_index(u) < bbp_idx;
    }

    // Coverage hook: deployed units over the one-RU-per-user baseline. The CU
    // and DC tiers are fixed-count, so their multiplier stays 1.
    const double baseline_ru = config.traffic.users;
    const int baseline_du =
        du_count(std::max(1, static_cast<int>(config.traffic.users)), config.sweep.du_fanout);
    plan.unit_coverage[unit_index(NodalUnit::RU)] = n_ru / baseline_ru;
    plan.unit_coverage[unit_index(NodalUnit::DU)] =
        static_cast<double>(plan.n_du) / static_cast<double>(baseline_du);
    plan.unit_coverage[unit_index(NodalUnit::CU)] = 1.0;
    plan.unit_coverage[unit_index(NodalUnit::DC)] = 1.0;
    // Fronthaul links follow RU deployment, midhaul links follow DUs, the
    // backhaul follows the fixed CU/DC core.
    plan.segment_coverage[segment_index(HaulSegment::fronthaul)] =
        plan.unit_coverage[unit_index(NodalUnit::RU)];
    plan.segment_coverage[segment_index(HaulSegment::midhaul)] =
        plan.unit_coverage[unit_index(NodalUnit::DU)];
    plan.segment_coverage[segment_index(HaulSegment::backhaul)] = 1.0;

    return plan;
}

EnergyBreakdown evaluate(const EvalPlan& plan, const RunConfig& config) {
    const Catalog& catalog = config.catalog;
    const RadioEnergy radio =
        radio_energy(units::nj_to_j(config.traffic.uplink_wireless_nj_per_bit), plan.n_ru,
                     catalog.device(DeviceRole::radio).rated_power_w, plan.traffic);

    // BBP runs against the capacity the tier is provisioned for, not the raw
    // stream: deployed (possibly idle) servers are what burn power.
    std::array<double, 4> e_b{};
    const std::size_t bbp_idx = unit_index(plan.deployment.unit);
    const TrafficModel provisioned{plan.traffic.user_traffic_bps, plan.deployment.provisioned_bps};
    e_b[bbp_idx] = processing_energy(config.units[bbp_idx], provisioned);

    std::array<double, 4> e_eq{};
    for (NodalUnit u : all_units) {
        const std::size_t i = unit_index(u);
        const UnitParams& unit = config.units[i];
        const double gamma = gamma_equipment(plan.pre_bbp[i], unit.rho * plan.unit_coverage[i],
                                             plan.traffic);
        e_eq[i] = equipment_energy(unit, gamma);
    }

    std::array<double, 3> e_haul{};
    for (HaulSegment seg : all_segments) {
        const std::size_t i = segment_index(seg);
        const HaulParams& haul = config.hauls[i];
        const double gamma = gamma_haul(seg, plan.deployment.unit,
                                        haul.rho * plan.segment_coverage[i], plan.traffic);
        e_haul[i] = haul_energy(haul, gamma, catalog);
    }

    return total_energy(radio, e_b, e_eq, e_haul[0], e_haul[1], e_haul[2]);
}

std::vector<SweepPoint> sweep(std::span<const ScenarioId> scenarios, const RunConfig& config) {
    if (scenarios.empty()) throw SchemaError("sweep: no scenarios requested");
    if (config.sweep.n_ru_min < 1 || config.sweep.n_ru_max < config.sweep.n_ru_min) {
        throw ValidationError("sweep: need 1 <= n_ru_min <= n_ru_max");
    }

    std::vector<SweepPoint> points;
    points.reserve(config.sweep.n_ru_max - config.sweep.n_ru_min + 1);
    for (int n = config.sweep.n_ru_min; n <= config.sweep.n_ru_max; ++n) {
        SweepPoint point;
        point.n_ru = n;
        point.n_du = du_count(n, config.sweep.du_fanout);
        point.n_cu = config.sweep.n_cu;
        point.n_dc = config.sweep.n_dc;
        point.users = config.traffic.users;
        for (ScenarioId id : scenarios) {
            try {
                point.breakdowns.emplace_back(id, evaluate(build(id, n, config), config));
            } catch (const Error& e) {
                throw Error(e.code(), std::string(e.what()) + " (sweep point n_ru=" +
                                          std::to_string(n) + ", " + to_string(id) + ")");
            }
        }
        points.push_back(std::move(point));
    }
    return points;
}

} // namespace ranergy
