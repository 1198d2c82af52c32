#include "ranergy/xhaul.hpp"

#include <string>

#include "ranergy/errors.hpp"
#include "ranergy/units.hpp"

namespace ranergy {

const char* to_string(NodalUnit u) {
    switch (u) {
        case NodalUnit::RU: return "RU";
        case NodalUnit::DU: return "DU";
        case NodalUnit::CU: return "CU";
        case NodalUnit::DC: return "DC";
    }
    return "?";
}

const char* to_string(HaulSegment s) {
    switch (s) {
        case HaulSegment::fronthaul: return "fronthaul";
        case HaulSegment::midhaul: return "midhaul";
        case HaulSegment::backhaul: return "backhaul";
    }
    return "?";
}

TrafficModel make_traffic(double users, double monthly_gb_per_user, int n_ru,
                          double ecpri_rate_per_ru_bps) {
    if (!(users > 0.0) || !(monthly_gb_per_user > 0.0)) {
        throw DomainError("traffic: users and monthly_gb_per_user must be > 0");
    }
    if (n_ru < 1) throw DomainError("traffic: n_ru must be >= 1");
    if (!(ecpri_rate_per_ru_bps > 0.0)) {
        throw DomainError("traffic: ecpri_rate_per_ru must be > 0");
    }
    TrafficModel t;
    t.user_traffic_bps =
        users * monthly_gb_per_user * units::bits_per_gigabyte / units::seconds_per_month;
    t.ecpri_traffic_bps = static_cast<double>(n_ru) * ecpri_rate_per_ru_bps;
    if (t.ecpri_traffic_bps < t.user_traffic_bps) {
        throw ValidationError("traffic: eCPRI traffic below user traffic; the digitized "
                              "radio stream must carry at least the user data");
    }
    return t;
}

RadioEnergy radio_energy(double e_w_j_per_bit, int n_ru, double radio_power_w,
                         const TrafficModel& traffic) {
    if (!(traffic.user_traffic_bps > 0.0)) {
        throw DomainError("radio: user traffic must be > 0");
    }
    if (n_ru < 0) throw DomainError("radio: n_ru must be >= 0");
    RadioEnergy r;
    r.e_w = e_w_j_per_bit;
    r.e_e = static_cast<double>(n_ru) * radio_power_w / traffic.user_traffic_bps;
    r.e_ra = r.e_w + r.e_e;
    return r;
}

double gamma_processing(const TrafficModel& traffic) {
    return traffic.ecpri_traffic_bps / traffic.user_traffic_bps;
}

double processing_energy(const UnitParams& unit, const TrafficModel& traffic) {
    if (!unit.server) {
        throw ValidationError("processing: unit hosts no server but is asked to run BBP");
    }
    return unit.alpha * unit.sigma * unit.rho * gamma_processing(traffic) *
           unit.server->energy_per_bit();
}

double gamma_equipment(bool unit_is_pre_bbp, double rho, const TrafficModel& traffic) {
    return unit_is_pre_bbp ? rho * gamma_processing(traffic) : 1.0;
}

double equipment_energy(const UnitParams& unit, double gamma) {
    if (gamma < 0.0) throw DomainError("equipment: gamma must be >= 0");
    return unit.alpha * unit.sigma * gamma * energy_per_bit(unit.nic);
}

double gamma_haul(HaulSegment segment, NodalUnit bbp_location, double rho,
                  const TrafficModel& traffic) {
    const double expanded = rho * gamma_processing(traffic);
    switch (segment) {
        case HaulSegment::fronthaul:
            return bbp_location == NodalUnit::RU ? 1.0 : expanded;
        case HaulSegment::midhaul:
            return (bbp_location == NodalUnit::CU || bbp_location == NodalUnit::DC) ? expanded
                                                                                    : 1.0;
        case HaulSegment::backhaul:
            return bbp_location == NodalUnit::DC ? expanded : 1.0;
    }
    throw DomainError("haul: unknown segment");
}

double haul_energy(const HaulParams& params, double gamma, const Catalog& catalog) {
    if (gamma < 0.0) throw DomainError("haul: gamma must be >= 0");
    if (params.hops_switch < 0 || params.hops_link < 0 || params.hops_router < 0) {
        throw ValidationError(std::string("haul: negative hop count on ") +
                              to_string(params.segment));
    }
    const bool backhaul = params.segment == HaulSegment::backhaul;
    if (!backhaul && params.hops_router != 0) {
        throw ValidationError(std::string("haul: router hops are a backhaul-only term, got ") +
                              std::to_string(params.hops_router) + " on " +
                              to_string(params.segment));
    }

    // Fronthaul/midhaul ride access switches; the backhaul sits in the core.
    const EquipmentSpec& sw =
        catalog.device(backhaul ? DeviceRole::core_switch : DeviceRole::access_switch);
    const EquipmentSpec& link = catalog.device(DeviceRole::fiber_link);

    double xi = (params.hops_switch + 1) * energy_per_bit(sw) +
                params.hops_link * energy_per_bit(link);
    if (backhaul) {
        xi += (params.hops_router + 1) * energy_per_bit(catalog.device(DeviceRole::router));
    }
    return params.alpha * params.sigma * gamma * xi;
}

EnergyBreakdown total_energy(const RadioEnergy& radio, const std::array<double, 4>& e_b_by_unit,
                             const std::array<double, 4>& e_eq_by_unit, double e_fh, double e_mh,
                             double e_bh) {
    EnergyBreakdown b;
    b.e_w = radio.e_w;
    b.e_e = radio.e_e;
    b.e_ra = radio.e_w + radio.e_e;
    b.e_b_by_unit = e_b_by_unit;
    b.e_eq_by_unit = e_eq_by_unit;
    b.e_fh = e_fh;
    b.e_mh = e_mh;
    b.e_bh = e_bh;
    // Fixed summation order; the sum invariants are exact, not approximate.
    b.e_pr = ((e_b_by_unit[0] + e_b_by_unit[1]) + e_b_by_unit[2]) + e_b_by_unit[3];
    const double e_eq =
        ((e_eq_by_unit[0] + e_eq_by_unit[1]) + e_eq_by_unit[2]) + e_eq_by_unit[3];
    b.e_tr = ((e_fh + e_mh) + e_bh) + e_eq;
    b.e_total = b.e_ra + b.e_pr + b.e_tr;
    return b;
}

} // namespace ranergy
