#pragma once

#include <string>
#include <vector>

namespace ranergy {

enum class DeviceRole {
    router,
    core_switch,
    access_switch,
    fiber_link,
    radio,
    nic,
};

const char* to_string(DeviceRole role);
DeviceRole device_role_from_string(const std::string& s);

// A named device with rated power and carried capacity. Transport and radio
// formulas only ever use the P/C ratio of these entries.
struct EquipmentSpec {
    std::string name;
    DeviceRole role = DeviceRole::nic;
    double rated_power_w = 0.0;  // > 0
    double capacity_bps = 0.0;   // > 0
};

// rated power over capacity, J/bit
double energy_per_bit(const EquipmentSpec& spec);

// A baseband-processing server at a nodal unit. Capacity is the whole-server
// throughput of fronthaul data it can process.
struct ServerSpec {
    int cores = 1;                  // >= 1
    double power_per_core_w = 0.0;  // > 0
    double bbp_capacity_bps = 0.0;  // > 0

    double total_power_w() const { return cores * power_per_core_w; }
    // energy per processed bit when fully utilized, J/bit
    double energy_per_bit() const { return total_power_w() / bbp_capacity_bps; }
};

struct Catalog {
    std::vector<EquipmentSpec> devices;
    ServerSpec edge_server; // RU/DU/CU sites
    ServerSpec dc_server;   // regional data center

    // First device with the given role; throws ValidationError when absent.
    const EquipmentSpec& device(DeviceRole role) const;
    // Lookup by name, nullptr when absent.
    const EquipmentSpec* find(const std::string& name) const;
};

// Throws ValidationError naming every offending entry.
void validate(const Catalog& catalog);

// Built-in equipment set and servers.
Catalog default_catalog();

// Canonical text form; equal catalogs serialize byte-identically.
std::string serialize(const Catalog& catalog);

} // namespace ranergy
