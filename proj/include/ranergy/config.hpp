#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ranergy/access.hpp"
#include "ranergy/catalog.hpp"
#include "ranergy/xhaul.hpp"

namespace ranergy {

struct TrafficSettings {
    double users = 100;
    double monthly_gb_per_user = 10.0;
    double ecpri_rate_per_ru_gbps = 11.0;   // Split-8 fronthaul line rate per RU
    double uplink_wireless_nj_per_bit = 25.0; // E_w
};

struct SweepSettings {
    int n_ru_min = 1;
    int n_ru_max = 100;
    int du_fanout = 4; // RUs per DU
    int n_cu = 2;
    int n_dc = 1;
};

// How a unit is provisioned with servers when a scenario places BBP there.
// RU and DU sites ship a fixed complement sized to the fronthaul they
// terminate; pooled sites grow with live demand, the CU on top of a reserved
// base.
struct ProvisionRule {
    double fixed_gbps = 0.0;   // per-instance reserved fronthaul capacity
    bool track_demand = false; // add the instance's share of live eCPRI traffic
};

// Fully resolved run configuration: built-in defaults with any file overrides
// applied. Immutable once loaded.
struct RunConfig {
    Catalog catalog;
    TrafficSettings traffic;
    std::array<UnitParams, 4> units;    // indexed by NodalUnit
    std::array<HaulParams, 3> hauls;    // indexed by HaulSegment
    std::array<ProvisionRule, 4> provisioning; // indexed by NodalUnit
    SweepSettings sweep;
    std::vector<AccessTechProfile> profiles;

    // Leaf-level report lines for `validate`: "path = value (default|override)".
    std::vector<std::string> provenance;
};

RunConfig default_config();

// Parse a JSON document and apply it over the defaults. In strict mode any
// unknown key raises SchemaError with its path; lenient mode ignores them.
RunConfig load_config_text(const std::string& json_text, bool lenient);
RunConfig load_config_file(const std::string& path, bool lenient);

// Re-checks every invariant; throws ValidationError naming the field paths.
void validate(const RunConfig& config);

} // namespace ranergy
