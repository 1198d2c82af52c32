#include <doctest.h>

#include "ranergy/catalog.hpp"
#include "ranergy/config.hpp"
#include "ranergy/errors.hpp"

using namespace ranergy;

TEST_CASE("default catalog carries the stock equipment set") {
    const Catalog c = default_catalog();
    CHECK_NOTHROW(validate(c));

    const EquipmentSpec& router = c.device(DeviceRole::router);
    CHECK(router.rated_power_w == 172.0);
    CHECK(router.capacity_bps == 3200e9);
    CHECK(c.device(DeviceRole::core_switch).rated_power_w == 3000.0);
    CHECK(c.device(DeviceRole::core_switch).capacity_bps == 25600e9);
    CHECK(c.device(DeviceRole::access_switch).rated_power_w == 86.7);
    CHECK(c.device(DeviceRole::access_switch).capacity_bps == 480e9);
    CHECK(c.device(DeviceRole::fiber_link).rated_power_w == 4265.0);
    CHECK(c.device(DeviceRole::fiber_link).capacity_bps == 9600e9);
    CHECK(c.device(DeviceRole::radio).rated_power_w == 110.0);
    CHECK(c.device(DeviceRole::radio).capacity_bps == 11e9);

    CHECK(c.edge_server.cores == 4);
    CHECK(c.edge_server.power_per_core_w == 6.0);
    CHECK(c.edge_server.bbp_capacity_bps == 1e9);
    CHECK(c.dc_server.cores == 20);
    CHECK(c.dc_server.power_per_core_w == 5.5);
    CHECK(c.dc_server.bbp_capacity_bps == 5e9);
}

TEST_CASE("energy_per_bit is the plain power/capacity ratio") {
    const Catalog c = default_catalog();
    // router: 172 W / 3200 Gbps = 0.05375 nJ/bit
    CHECK(energy_per_bit(c.device(DeviceRole::router)) ==
          doctest::Approx(5.375e-11).epsilon(1e-12));
    // access switch: 86.7 W / 480 Gbps ~ 0.1806 nJ/bit
    CHECK(energy_per_bit(c.device(DeviceRole::access_switch)) ==
          doctest::Approx(1.80625e-10).epsilon(1e-12));

    EquipmentSpec identity{"unit-ratio", DeviceRole::nic, 42.0, 42.0};
    CHECK(energy_per_bit(identity) == 1.0);

    EquipmentSpec bad{"no-capacity", DeviceRole::nic, 10.0, 0.0};
    CHECK_THROWS_AS(energy_per_bit(bad), ValidationError);
}

TEST_CASE("server energy per bit at full utilization") {
    const Catalog c = default_catalog();
    CHECK(c.edge_server.total_power_w() == 24.0);
    CHECK(c.edge_server.energy_per_bit() == 2.4e-8); // 24 W over 1 Gbps
    CHECK(c.dc_server.total_power_w() == 110.0);
    CHECK(c.dc_server.energy_per_bit() == 2.2e-8); // 110 W over 5 Gbps
}

TEST_CASE("catalog validation names the offending entries") {
    Catalog c = default_catalog();
    c.devices.push_back({"dead-switch", DeviceRole::access_switch, 10.0, 0.0});
    try {
        validate(c);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("dead-switch") != std::string::npos);
    }

    Catalog dup = default_catalog();
    dup.devices.push_back({"cisco-8000", DeviceRole::router, 1.0, 1.0});
    try {
        validate(dup);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }

    Catalog missing = default_catalog();
    std::erase_if(missing.devices, [](const EquipmentSpec& d) { return d.role == DeviceRole::radio; });
    CHECK_THROWS_AS(validate(missing), ValidationError);
}

TEST_CASE("loading identical documents yields byte-identical catalogs") {
    const char* doc = R"({
        "devices": [
            {"name": "r", "role": "router", "power_w": 172, "capacity_gbps": 3200},
            {"name": "cs", "role": "core_switch", "power_w": 3000, "capacity_gbps": 25600},
            {"name": "as", "role": "access_switch", "power_w": 86.7, "capacity_gbps": 480},
            {"name": "fl", "role": "fiber_link", "power_w": 4265, "capacity_gbps": 9600},
            {"name": "ra", "role": "radio", "power_w": 110, "capacity_gbps": 11}
        ],
        "servers": {"edge": {"cores": 4, "power_per_core_w": 6, "bbp_capacity_gbps": 1}}
    })";
    const RunConfig a = load_config_text(doc, false);
    const RunConfig b = load_config_text(doc, false);
    CHECK(serialize(a.catalog) == serialize(b.catalog));
    CHECK(a.catalog.find("as") != nullptr);
    CHECK(a.catalog.find("nope") == nullptr);
}
