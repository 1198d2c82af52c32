#include "ranergy/access.hpp"

#include <cmath>

#include "ranergy/errors.hpp"
#include "ranergy/units.hpp"

namespace ranergy {

double access_energy_per_bit(const AccessTechProfile& profile, double access_rate_bps) {
    if (!(access_rate_bps > 0.0)) {
        throw DomainError("access: rate must be > 0 for profile '" + profile.name + "'");
    }
    const double shared = profile.terminal_power_w / profile.users_per_terminal +
                          profile.remote_power_w / profile.users_per_remote +
                          profile.cpe_power_w / 2.0;
    return (2.0 / access_rate_bps) * shared;
}

std::vector<AccessComparisonRow> compare_technologies(std::span<const AccessTechProfile> profiles,
                                                      std::span<const double> rates_bps) {
    if (profiles.empty()) throw SchemaError("access: empty profile list");
    if (rates_bps.empty()) throw SchemaError("access: empty rate grid");

    std::vector<AccessComparisonRow> rows;
    rows.reserve(profiles.size() * rates_bps.size());
    for (const auto& p : profiles) {
        for (double r : rates_bps) {
            try {
                rows.push_back({p.name, r, access_energy_per_bit(p, r)});
            } catch (const DomainError& e) {
                throw DomainError(std::string(e.what()) + " (row " + p.name + ", " +
                                  std::to_string(r) + " bps)");
            }
        }
    }
    return rows;
}

std::vector<double> rate_grid(double lo_bps, double hi_bps, int points, bool log_spaced) {
    if (!(lo_bps > 0.0) || !(hi_bps > 0.0) || hi_bps < lo_bps) {
        throw DomainError("access: rate grid bounds must satisfy 0 < lo <= hi");
    }
    if (points < 1) throw DomainError("access: rate grid needs at least 1 point");

    std::vector<double> rates(points);
    if (points == 1) {
        rates[0] = lo_bps;
        return rates;
    }
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        rates[i] = log_spaced ? lo_bps * std::pow(hi_bps / lo_bps, t)
                              : lo_bps + t * (hi_bps - lo_bps);
    }
    rates.back() = hi_bps; // pin the endpoint against pow() drift
    return rates;
}

std::vector<AccessTechProfile> default_profiles(const Catalog& catalog) {
    const EquipmentSpec& sw = catalog.device(DeviceRole::access_switch);
    const EquipmentSpec& radio = catalog.device(DeviceRole::radio);

    // Terminal share of the O-RAN profile: switch capacity divided by the
    // 100 Mbps nominal access rate.
    const double oran_users_per_switch = sw.capacity_bps / 100e6;

    std::vector<AccessTechProfile> profiles;
    profiles.push_back({"PON", 1340.0, 1024, 0.0, 32, 5.0, true});
    profiles.push_back({"PtP", 300.0, 48, 0.0, 1, 4.0, true});
    profiles.push_back({"FTTN", 300.0, 48, 1700.0, 384, 10.0, true});
    profiles.push_back({"WiMAX", 300.0, 48, 1200.0, 100, 12.0, true});
    profiles.push_back({"LTE", sw.rated_power_w, 48, 528.0, 200, 10.0, true});
    profiles.push_back({"O-RAN", sw.rated_power_w, oran_users_per_switch, radio.rated_power_w,
                        100, 10.0, false});
    return profiles;
}

} // namespace ranergy
