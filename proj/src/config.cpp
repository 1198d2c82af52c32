#include "ranergy/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ranergy/errors.hpp"
#include "ranergy/scenario.hpp"
#include "ranergy/units.hpp"

namespace ranergy {

using nlohmann::json;

namespace {

// Tracks which JSON paths a config file touched, for the validate report.
struct Overrides {
    std::set<std::string> paths;
    bool has(const std::string& p) const { return paths.count(p) != 0; }
};

[[noreturn]] void type_error(const std::string& path, const char* expected) {
    throw SchemaError("config: field '" + path + "' must be " + expected);
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) type_error(path, "a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) type_error(path, "an integer");
    return j.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) type_error(path, "a string");
    return j.get<std::string>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) type_error(path, "a boolean");
    return j.get<bool>();
}

// Walks an object's keys against the allowed set; strict mode errors on
// anything unexpected, with the full path in the message.
void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed, bool lenient) {
    if (!obj.is_object()) type_error(path.empty() ? "(root)" : path, "an object");
    if (lenient) return;
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) {
            throw SchemaError("config: unknown key '" + (path.empty() ? key : path + "." + key) +
                              "' (pass --lenient to ignore)");
        }
    }
}

void apply_servers(const json& j, ServerSpec& server, const std::string& path, bool lenient,
                   Overrides& ov) {
    check_keys(j, path, {"cores", "power_per_core_w", "bbp_capacity_gbps"}, lenient);
    if (j.contains("cores")) {
        server.cores = get_int(j["cores"], path + ".cores");
        ov.paths.insert(path + ".cores");
    }
    if (j.contains("power_per_core_w")) {
        server.power_per_core_w = get_number(j["power_per_core_w"], path + ".power_per_core_w");
        ov.paths.insert(path + ".power_per_core_w");
    }
    if (j.contains("bbp_capacity_gbps")) {
        server.bbp_capacity_bps =
            units::gbps_to_bps(get_number(j["bbp_capacity_gbps"], path + ".bbp_capacity_gbps"));
        ov.paths.insert(path + ".bbp_capacity_gbps");
    }
}

void apply_unit(const json& j, RunConfig& config, NodalUnit u, const std::string& path,
                bool lenient, Overrides& ov) {
    check_keys(j, path, {"alpha", "sigma", "rho", "nic", "base_pool_gbps"}, lenient);
    UnitParams& unit = config.units[unit_index(u)];
    if (j.contains("alpha")) {
        unit.alpha = get_number(j["alpha"], path + ".alpha");
        ov.paths.insert(path + ".alpha");
    }
    if (j.contains("sigma")) {
        unit.sigma = get_number(j["sigma"], path + ".sigma");
        ov.paths.insert(path + ".sigma");
    }
    if (j.contains("rho")) {
        unit.rho = get_number(j["rho"], path + ".rho");
        ov.paths.insert(path + ".rho");
    }
    if (j.contains("nic")) {
        const std::string name = get_string(j["nic"], path + ".nic");
        const EquipmentSpec* dev = config.catalog.find(name);
        if (!dev) {
            throw ValidationError("config: " + path + ".nic references unknown device '" + name +
                                  "'");
        }
        unit.nic = *dev;
        ov.paths.insert(path + ".nic");
    }
    if (j.contains("base_pool_gbps")) {
        if (u != NodalUnit::CU) {
            throw SchemaError("config: " + path + ".base_pool_gbps only applies to the cu unit");
        }
        config.provisioning[unit_index(u)].fixed_gbps =
            get_number(j["base_pool_gbps"], path + ".base_pool_gbps");
        ov.paths.insert(path + ".base_pool_gbps");
    }
}

void apply_haul(const json& j, HaulParams& haul, const std::string& path, bool lenient,
                Overrides& ov) {
    check_keys(j, path, {"alpha", "sigma", "rho", "hops_switch", "hops_link", "hops_router"},
               lenient);
    if (j.contains("alpha")) {
        haul.alpha = get_number(j["alpha"], path + ".alpha");
        ov.paths.insert(path + ".alpha");
    }
    if (j.contains("sigma")) {
        haul.sigma = get_number(j["sigma"], path + ".sigma");
        ov.paths.insert(path + ".sigma");
    }
    if (j.contains("rho")) {
        haul.rho = get_number(j["rho"], path + ".rho");
        ov.paths.insert(path + ".rho");
    }
    if (j.contains("hops_switch")) {
        haul.hops_switch = get_int(j["hops_switch"], path + ".hops_switch");
        ov.paths.insert(path + ".hops_switch");
    }
    if (j.contains("hops_link")) {
        haul.hops_link = get_int(j["hops_link"], path + ".hops_link");
        ov.paths.insert(path + ".hops_link");
    }
    if (j.contains("hops_router")) {
        haul.hops_router = get_int(j["hops_router"], path + ".hops_router");
        ov.paths.insert(path + ".hops_router");
    }
}

std::string format_value(double v) {
    std::ostringstream oss;
    oss.precision(12);
    oss << v;
    return oss.str();
}

void add_line(RunConfig& config, const Overrides& ov, const std::string& path,
              const std::string& value) {
    config.provenance.push_back(path + " = " + value + (ov.has(path) ? "  (override)" : "  (default)"));
}

void build_provenance(RunConfig& config, const Overrides& ov) {
    config.provenance.clear();
    add_line(config, ov, "devices", std::to_string(config.catalog.devices.size()) + " entries");
    add_line(config, ov, "servers.edge.cores", std::to_string(config.catalog.edge_server.cores));
    add_line(config, ov, "servers.edge.power_per_core_w",
             format_value(config.catalog.edge_server.power_per_core_w));
    add_line(config, ov, "servers.edge.bbp_capacity_gbps",
             format_value(units::bps_to_gbps(config.catalog.edge_server.bbp_capacity_bps)));
    add_line(config, ov, "servers.dc.cores", std::to_string(config.catalog.dc_server.cores));
    add_line(config, ov, "servers.dc.power_per_core_w",
             format_value(config.catalog.dc_server.power_per_core_w));
    add_line(config, ov, "servers.dc.bbp_capacity_gbps",
             format_value(units::bps_to_gbps(config.catalog.dc_server.bbp_capacity_bps)));
    add_line(config, ov, "traffic.users", format_value(config.traffic.users));
    add_line(config, ov, "traffic.monthly_gb_per_user",
             format_value(config.traffic.monthly_gb_per_user));
    add_line(config, ov, "traffic.ecpri_rate_per_ru_gbps",
             format_value(config.traffic.ecpri_rate_per_ru_gbps));
    add_line(config, ov, "traffic.uplink_wireless_nj_per_bit",
             format_value(config.traffic.uplink_wireless_nj_per_bit));
    for (NodalUnit u : all_units) {
        std::string base = std::string("units.") + to_string(u);
        for (auto& c : base) c = static_cast<char>(std::tolower(c));
        const UnitParams& unit = config.units[unit_index(u)];
        add_line(config, ov, base + ".alpha", format_value(unit.alpha));
        add_line(config, ov, base + ".sigma", format_value(unit.sigma));
        add_line(config, ov, base + ".rho", format_value(unit.rho));
        add_line(config, ov, base + ".nic", unit.nic.name);
        if (u == NodalUnit::CU) {
            add_line(config, ov, base + ".base_pool_gbps",
                     format_value(config.provisioning[unit_index(u)].fixed_gbps));
        }
    }
    for (HaulSegment s : all_segments) {
        const std::string base = std::string("hauls.") + to_string(s);
        const HaulParams& haul = config.hauls[segment_index(s)];
        add_line(config, ov, base + ".alpha", format_value(haul.alpha));
        add_line(config, ov, base + ".sigma", format_value(haul.sigma));
        add_line(config, ov, base + ".rho", format_value(haul.rho));
        add_line(config, ov, base + ".hops_switch", std::to_string(haul.hops_switch));
        add_line(config, ov, base + ".hops_link", std::to_string(haul.hops_link));
        if (s == HaulSegment::backhaul) {
            add_line(config, ov, base + ".hops_router", std::to_string(haul.hops_router));
        }
    }
    add_line(config, ov, "sweep.n_ru_min", std::to_string(config.sweep.n_ru_min));
    add_line(config, ov, "sweep.n_ru_max", std::to_string(config.sweep.n_ru_max));
    add_line(config, ov, "sweep.du_fanout", std::to_string(config.sweep.du_fanout));
    add_line(config, ov, "sweep.n_cu", std::to_string(config.sweep.n_cu));
    add_line(config, ov, "sweep.n_dc", std::to_string(config.sweep.n_dc));
    add_line(config, ov, "profiles", std::to_string(config.profiles.size()) + " entries");
}

// Re-derives everything that hangs off the catalog (NIC defaults, servers at
// units, provisioning quanta) unless explicitly overridden.
void wire_defaults(RunConfig& config, const Overrides& ov) {
    const EquipmentSpec& nic_default = config.catalog.device(DeviceRole::access_switch);
    const double ecpri = config.traffic.ecpri_rate_per_ru_gbps;

    for (NodalUnit u : all_units) {
        std::string base = std::string("units.") + to_string(u);
        for (auto& c : base) c = static_cast<char>(std::tolower(c));
        UnitParams& unit = config.units[unit_index(u)];
        if (!ov.has(base + ".nic")) unit.nic = nic_default;
        unit.server = (u == NodalUnit::DC) ? config.catalog.dc_server : config.catalog.edge_server;
    }

    // Provisioning quanta: RU terminates its own line rate, the DU its full
    // fan-out; CU pools demand on top of its reserved base; the DC is pure
    // demand.
    config.provisioning[unit_index(NodalUnit::RU)] = {ecpri, false};
    config.provisioning[unit_index(NodalUnit::DU)] = {config.sweep.du_fanout * ecpri, false};
    if (!ov.has("units.cu.base_pool_gbps")) {
        config.provisioning[unit_index(NodalUnit::CU)].fixed_gbps = 22.0;
    }
    config.provisioning[unit_index(NodalUnit::CU)].track_demand = true;
    config.provisioning[unit_index(NodalUnit::DC)] = {0.0, true};

    if (!ov.has("profiles")) config.profiles = default_profiles(config.catalog);
}

AccessTechProfile parse_profile(const json& j, std::size_t i, bool lenient) {
    const std::string path = "profiles[" + std::to_string(i) + "]";
    check_keys(j, path, {"name", "p_tu_w", "n_tu", "p_rn_w", "n_rn", "p_cpe_w", "calibration"},
               lenient);
    AccessTechProfile p;
    if (!j.contains("name")) throw SchemaError("config: " + path + ".name is required");
    p.name = get_string(j["name"], path + ".name");
    if (j.contains("p_tu_w")) p.terminal_power_w = get_number(j["p_tu_w"], path + ".p_tu_w");
    if (j.contains("n_tu")) p.users_per_terminal = get_number(j["n_tu"], path + ".n_tu");
    if (j.contains("p_rn_w")) p.remote_power_w = get_number(j["p_rn_w"], path + ".p_rn_w");
    if (j.contains("n_rn")) p.users_per_remote = get_number(j["n_rn"], path + ".n_rn");
    if (j.contains("p_cpe_w")) p.cpe_power_w = get_number(j["p_cpe_w"], path + ".p_cpe_w");
    if (j.contains("calibration")) p.calibration = get_bool(j["calibration"], path + ".calibration");
    return p;
}

} // namespace

RunConfig default_config() {
    RunConfig config;
    config.catalog = default_catalog();
    config.traffic = TrafficSettings{};
    config.sweep = SweepSettings{};

    // Deployment factors; the shipped values are the calibration that places
    // the densification behaviors (see README).
    auto& ru = config.units[unit_index(NodalUnit::RU)];
    ru.alpha = 2.0;
    ru.sigma = 1.5;
    ru.rho = 5.0; // radio sites are coverage-built, not demand-built
    auto& du = config.units[unit_index(NodalUnit::DU)];
    du.alpha = 2.0;
    du.sigma = 1.5;
    du.rho = 1.0;
    auto& cu = config.units[unit_index(NodalUnit::CU)];
    cu.alpha = 1.76; // pooled edge cloud runs leaner than street sites
    cu.sigma = 1.5;
    cu.rho = 1.0;
    auto& dc = config.units[unit_index(NodalUnit::DC)];
    dc.alpha = 1.8;
    dc.sigma = 1.5;
    dc.rho = 1.0;

    // Transport: ~22% utilized links plus facility overhead.
    config.hauls[segment_index(HaulSegment::fronthaul)] =
        {HaulSegment::fronthaul, 4.5, 2.0, 1.0, 0, 1, 0};
    config.hauls[segment_index(HaulSegment::midhaul)] =
        {HaulSegment::midhaul, 4.5, 2.0, 1.0, 1, 2, 0};
    config.hauls[segment_index(HaulSegment::backhaul)] =
        {HaulSegment::backhaul, 4.5, 2.0, 1.0, 1, 4, 1};

    Overrides none;
    wire_defaults(config, none);
    build_provenance(config, none);
    return config;
}

RunConfig load_config_text(const std::string& json_text, bool lenient) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("config: not valid JSON: ") + e.what());
    }

    RunConfig config = default_config();
    Overrides ov;
    check_keys(root, "",
               {"devices", "servers", "traffic", "units", "hauls", "sweep", "profiles"}, lenient);

    if (root.contains("devices")) {
        if (!root["devices"].is_array()) type_error("devices", "an array");
        config.catalog.devices.clear();
        std::size_t i = 0;
        for (const auto& dj : root["devices"]) {
            const std::string path = "devices[" + std::to_string(i++) + "]";
            check_keys(dj, path, {"name", "role", "power_w", "capacity_gbps"}, lenient);
            for (const char* req : {"name", "role", "power_w", "capacity_gbps"}) {
                if (!dj.contains(req)) {
                    throw SchemaError("config: " + path + "." + req + " is required");
                }
            }
            EquipmentSpec spec;
            spec.name = get_string(dj["name"], path + ".name");
            try {
                spec.role = device_role_from_string(get_string(dj["role"], path + ".role"));
            } catch (const SchemaError&) {
                throw SchemaError("config: " + path + ".role: unknown role '" +
                                  dj["role"].get<std::string>() + "'");
            }
            spec.rated_power_w = get_number(dj["power_w"], path + ".power_w");
            spec.capacity_bps =
                units::gbps_to_bps(get_number(dj["capacity_gbps"], path + ".capacity_gbps"));
            config.catalog.devices.push_back(std::move(spec));
        }
        ov.paths.insert("devices");
    }
    if (root.contains("servers")) {
        check_keys(root["servers"], "servers", {"edge", "dc"}, lenient);
        if (root["servers"].contains("edge")) {
            apply_servers(root["servers"]["edge"], config.catalog.edge_server, "servers.edge",
                          lenient, ov);
        }
        if (root["servers"].contains("dc")) {
            apply_servers(root["servers"]["dc"], config.catalog.dc_server, "servers.dc", lenient,
                          ov);
        }
    }
    if (root.contains("traffic")) {
        const json& t = root["traffic"];
        check_keys(t, "traffic",
                   {"users", "monthly_gb_per_user", "ecpri_rate_per_ru_gbps",
                    "uplink_wireless_nj_per_bit"},
                   lenient);
        if (t.contains("users")) {
            config.traffic.users = get_number(t["users"], "traffic.users");
            ov.paths.insert("traffic.users");
        }
        if (t.contains("monthly_gb_per_user")) {
            config.traffic.monthly_gb_per_user =
                get_number(t["monthly_gb_per_user"], "traffic.monthly_gb_per_user");
            ov.paths.insert("traffic.monthly_gb_per_user");
        }
        if (t.contains("ecpri_rate_per_ru_gbps")) {
            config.traffic.ecpri_rate_per_ru_gbps =
                get_number(t["ecpri_rate_per_ru_gbps"], "traffic.ecpri_rate_per_ru_gbps");
            ov.paths.insert("traffic.ecpri_rate_per_ru_gbps");
        }
        if (t.contains("uplink_wireless_nj_per_bit")) {
            config.traffic.uplink_wireless_nj_per_bit =
                get_number(t["uplink_wireless_nj_per_bit"], "traffic.uplink_wireless_nj_per_bit");
            ov.paths.insert("traffic.uplink_wireless_nj_per_bit");
        }
    }
    if (root.contains("sweep")) {
        const json& s = root["sweep"];
        check_keys(s, "sweep", {"n_ru_min", "n_ru_max", "du_fanout", "n_cu", "n_dc"}, lenient);
        if (s.contains("n_ru_min")) {
            config.sweep.n_ru_min = get_int(s["n_ru_min"], "sweep.n_ru_min");
            ov.paths.insert("sweep.n_ru_min");
        }
        if (s.contains("n_ru_max")) {
            config.sweep.n_ru_max = get_int(s["n_ru_max"], "sweep.n_ru_max");
            ov.paths.insert("sweep.n_ru_max");
        }
        if (s.contains("du_fanout")) {
            config.sweep.du_fanout = get_int(s["du_fanout"], "sweep.du_fanout");
            ov.paths.insert("sweep.du_fanout");
        }
        if (s.contains("n_cu")) {
            config.sweep.n_cu = get_int(s["n_cu"], "sweep.n_cu");
            ov.paths.insert("sweep.n_cu");
        }
        if (s.contains("n_dc")) {
            config.sweep.n_dc = get_int(s["n_dc"], "sweep.n_dc");
            ov.paths.insert("sweep.n_dc");
        }
    }
    if (root.contains("units")) {
        check_keys(root["units"], "units", {"ru", "du", "cu", "dc"}, lenient);
        const std::pair<const char*, NodalUnit> keys[] = {{"ru", NodalUnit::RU},
                                                          {"du", NodalUnit::DU},
                                                          {"cu", NodalUnit::CU},
                                                          {"dc", NodalUnit::DC}};
        for (const auto& [key, unit] : keys) {
            if (root["units"].contains(key)) {
                apply_unit(root["units"][key], config, unit, std::string("units.") + key, lenient,
                           ov);
            }
        }
    }
    if (root.contains("hauls")) {
        check_keys(root["hauls"], "hauls", {"fronthaul", "midhaul", "backhaul"}, lenient);
        for (HaulSegment seg : all_segments) {
            const char* key = to_string(seg);
            if (root["hauls"].contains(key)) {
                apply_haul(root["hauls"][key], config.hauls[segment_index(seg)],
                           std::string("hauls.") + key, lenient, ov);
            }
        }
    }
    if (root.contains("profiles")) {
        if (!root["profiles"].is_array()) type_error("profiles", "an array");
        config.profiles.clear();
        std::size_t i = 0;
        for (const auto& pj : root["profiles"]) {
            config.profiles.push_back(parse_profile(pj, i++, lenient));
        }
        ov.paths.insert("profiles");
    }

    wire_defaults(config, ov);
    build_provenance(config, ov);
    validate(config);
    return config;
}

RunConfig load_config_file(const std::string& path, bool lenient) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("error reading config file '" + path + "'");
    return load_config_text(buffer.str(), lenient);
}

void validate(const RunConfig& config) {
    validate(config.catalog);

    std::vector<std::string> problems;
    const TrafficSettings& t = config.traffic;
    if (!(t.users > 0)) problems.push_back("traffic.users: must be > 0");
    if (!(t.monthly_gb_per_user > 0)) problems.push_back("traffic.monthly_gb_per_user: must be > 0");
    if (!(t.ecpri_rate_per_ru_gbps > 0)) {
        problems.push_back("traffic.ecpri_rate_per_ru_gbps: must be > 0");
    }
    if (t.uplink_wireless_nj_per_bit < 0) {
        problems.push_back("traffic.uplink_wireless_nj_per_bit: must be >= 0");
    }

    for (NodalUnit u : all_units) {
        std::string base = std::string("units.") + to_string(u);
        for (auto& c : base) c = static_cast<char>(std::tolower(c));
        const UnitParams& unit = config.units[unit_index(u)];
        if (!(unit.alpha >= 1.0)) problems.push_back(base + ".alpha: must be >= 1");
        if (!(unit.sigma >= 1.0)) problems.push_back(base + ".sigma: must be >= 1");
        if (!(unit.rho >= 1.0)) problems.push_back(base + ".rho: must be >= 1");
        if (!(unit.nic.rated_power_w > 0) || !(unit.nic.capacity_bps > 0)) {
            problems.push_back(base + ".nic: power and capacity must be positive");
        }
        if (!unit.server) problems.push_back(base + ": no server assigned");
    }

    for (HaulSegment s : all_segments) {
        const std::string base = std::string("hauls.") + to_string(s);
        const HaulParams& haul = config.hauls[segment_index(s)];
        if (!(haul.alpha > 0)) problems.push_back(base + ".alpha: must be > 0");
        if (!(haul.sigma > 0)) problems.push_back(base + ".sigma: must be > 0");
        if (!(haul.rho > 0)) problems.push_back(base + ".rho: must be > 0");
        if (haul.hops_switch < 0) problems.push_back(base + ".hops_switch: must be >= 0");
        if (haul.hops_link < 0) problems.push_back(base + ".hops_link: must be >= 0");
        if (haul.hops_router < 0) problems.push_back(base + ".hops_router: must be >= 0");
        if (s != HaulSegment::backhaul && haul.hops_router != 0) {
            problems.push_back(base + ".hops_router: backhaul-only term");
        }
    }

    const SweepSettings& s = config.sweep;
    if (s.n_ru_min < 1) problems.push_back("sweep.n_ru_min: must be >= 1");
    if (s.n_ru_max < s.n_ru_min) problems.push_back("sweep.n_ru_max: must be >= n_ru_min");
    if (s.du_fanout < 1) problems.push_back("sweep.du_fanout: must be >= 1");
    if (s.n_cu < 1) problems.push_back("sweep.n_cu: must be >= 1");
    if (s.n_dc < 1) problems.push_back("sweep.n_dc: must be >= 1");

    const ProvisionRule& cu_rule = config.provisioning[unit_index(NodalUnit::CU)];
    if (cu_rule.fixed_gbps < 0) problems.push_back("units.cu.base_pool_gbps: must be >= 0");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < config.profiles.size(); ++i) {
        const AccessTechProfile& p = config.profiles[i];
        const std::string base = "profiles[" + std::to_string(i) + "]";
        if (p.name.empty()) problems.push_back(base + ".name: must be non-empty");
        if (!seen.insert(p.name).second) problems.push_back(base + ".name: duplicate '" + p.name + "'");
        if (p.terminal_power_w < 0) problems.push_back(base + ".p_tu_w: must be >= 0");
        if (p.remote_power_w < 0) problems.push_back(base + ".p_rn_w: must be >= 0");
        if (p.cpe_power_w < 0) problems.push_back(base + ".p_cpe_w: must be >= 0");
        if (!(p.users_per_terminal >= 1)) problems.push_back(base + ".n_tu: must be >= 1");
        if (!(p.users_per_remote >= 1)) problems.push_back(base + ".n_rn: must be >= 1");
    }

    if (!problems.empty()) {
        std::ostringstream oss;
        oss << problems.size() << " config problem" << (problems.size() == 1 ? "" : "s") << ":";
        for (const auto& p : problems) oss << "\n  - " << p;
        throw ValidationError(oss.str());
    }
}

} // namespace ranergy
