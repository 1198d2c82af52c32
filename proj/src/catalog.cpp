#include "ranergy/catalog.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "ranergy/errors.hpp"
#include "ranergy/units.hpp"

namespace ranergy {

const char* to_string(DeviceRole role) {
    switch (role) {
        case DeviceRole::router: return "router";
        case DeviceRole::core_switch: return "core_switch";
        case DeviceRole::access_switch: return "access_switch";
        case DeviceRole::fiber_link: return "fiber_link";
        case DeviceRole::radio: return "radio";
        case DeviceRole::nic: return "nic";
    }
    return "?";
}

DeviceRole device_role_from_string(const std::string& s) {
    for (DeviceRole r : {DeviceRole::router, DeviceRole::core_switch, DeviceRole::access_switch,
                         DeviceRole::fiber_link, DeviceRole::radio, DeviceRole::nic}) {
        if (s == to_string(r)) return r;
    }
    throw SchemaError("unknown device role '" + s + "'");
}

double energy_per_bit(const EquipmentSpec& spec) {
    if (!(spec.rated_power_w > 0.0) || !(spec.capacity_bps > 0.0)) {
        throw ValidationError("device '" + spec.name + "': power and capacity must be positive");
    }
    return spec.rated_power_w / spec.capacity_bps;
}

const EquipmentSpec& Catalog::device(DeviceRole role) const {
    for (const auto& d : devices) {
        if (d.role == role) return d;
    }
    throw ValidationError(std::string("catalog has no device with role '") + to_string(role) + "'");
}

const EquipmentSpec* Catalog::find(const std::string& name) const {
    for (const auto& d : devices) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

namespace {

void validate_server(const ServerSpec& server, const char* which, std::vector<std::string>& problems) {
    if (server.cores < 1) {
        problems.push_back(std::string("servers.") + which + ".cores: must be >= 1");
    }
    if (!(server.power_per_core_w > 0.0)) {
        problems.push_back(std::string("servers.") + which + ".power_per_core_w: must be > 0");
    }
    if (!(server.bbp_capacity_bps > 0.0)) {
        problems.push_back(std::string("servers.") + which + ".bbp_capacity_gbps: must be > 0");
    }
}

} // namespace

void validate(const Catalog& catalog) {
    std::vector<std::string> problems;
    std::set<std::string> seen;
    for (const auto& d : catalog.devices) {
        if (d.name.empty()) {
            problems.push_back("devices[]: empty device name");
        } else if (!seen.insert(d.name).second) {
            problems.push_back("devices['" + d.name + "']: duplicate name");
        }
        if (!(d.rated_power_w > 0.0) || !std::isfinite(d.rated_power_w)) {
            problems.push_back("devices['" + d.name + "'].power_w: must be > 0");
        }
        if (!(d.capacity_bps > 0.0) || !std::isfinite(d.capacity_bps)) {
            problems.push_back("devices['" + d.name + "'].capacity_gbps: must be > 0");
        }
    }
    // Every scenario touches the full transport chain, so all five roles must
    // resolve (the NIC slot falls back to the access switch).
    for (DeviceRole role : {DeviceRole::router, DeviceRole::core_switch, DeviceRole::access_switch,
                            DeviceRole::fiber_link, DeviceRole::radio}) {
        bool found = false;
        for (const auto& d : catalog.devices) {
            found = found || d.role == role;
        }
        if (!found) problems.push_back(std::string("devices[]: missing role '") + to_string(role) + "'");
    }
    validate_server(catalog.edge_server, "edge", problems);
    validate_server(catalog.dc_server, "dc", problems);

    if (!problems.empty()) {
        std::ostringstream oss;
        oss << "invalid catalog:";
        for (const auto& p : problems) oss << "\n  - " << p;
        throw ValidationError(oss.str());
    }
}

Catalog default_catalog() {
    using units::gbps_to_bps;
    Catalog c;
    c.devices = {
        {"cisco-8000", DeviceRole::router, 172.0, gbps_to_bps(3200.0)},
        {"cisco-9600", DeviceRole::core_switch, 3000.0, gbps_to_bps(25600.0)},
        {"catalyst-1300", DeviceRole::access_switch, 86.7, gbps_to_bps(480.0)},
        {"1finity-t600", DeviceRole::fiber_link, 4265.0, gbps_to_bps(9600.0)},
        {"benetel-650", DeviceRole::radio, 110.0, gbps_to_bps(11.0)},
    };
    c.edge_server = ServerSpec{4, 6.0, gbps_to_bps(1.0)};
    c.dc_server = ServerSpec{20, 5.5, gbps_to_bps(5.0)};
    return c;
}

std::string serialize(const Catalog& catalog) {
    std::ostringstream oss;
    oss.precision(17);
    for (const auto& d : catalog.devices) {
        oss << d.name << ',' << to_string(d.role) << ',' << d.rated_power_w << ','
            << d.capacity_bps << '\n';
    }
    for (const ServerSpec* s : {&catalog.edge_server, &catalog.dc_server}) {
        oss << s->cores << ',' << s->power_per_core_w << ',' << s->bbp_capacity_bps << '\n';
    }
    return oss.str();
}

} // namespace ranergy
