#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "ranergy/catalog.hpp"

namespace ranergy {

// Nodal units of the RAN in uplink order. Everything indexed per-unit uses
// this order.
enum class NodalUnit : int { RU = 0, DU = 1, CU = 2, DC = 3 };

inline constexpr std::array<NodalUnit, 4> all_units{
    NodalUnit::RU, NodalUnit::DU, NodalUnit::CU, NodalUnit::DC};

constexpr std::size_t unit_index(NodalUnit u) { return static_cast<std::size_t>(u); }
const char* to_string(NodalUnit u);

// Deployment factors and hardware of one nodal unit.
struct UnitParams {
    double alpha = 2.0; // overprovisioning, >= 1
    double sigma = 1.5; // overhead (cooling, distribution losses), >= 1
    double rho = 1.0;   // coverage, >= 1
    EquipmentSpec nic;  // interface card / line-system chassis, P_I / C_I
    std::optional<ServerSpec> server; // present iff the unit can host BBP
};

// Mean traffic levels a configuration is evaluated against.
//   user_traffic_bps  - aggregate user traffic c_u
//   ecpri_traffic_bps - eCPRI traffic c_n, >= c_u
struct TrafficModel {
    double user_traffic_bps = 0.0;
    double ecpri_traffic_bps = 0.0;
};

// c_u from the per-user data volume (fixed 30-day month), c_n from the per-RU
// eCPRI line rate. Throws DomainError / ValidationError on degenerate input.
TrafficModel make_traffic(double users, double monthly_gb_per_user, int n_ru,
                          double ecpri_rate_per_ru_bps);

enum class HaulSegment : int { fronthaul = 0, midhaul = 1, backhaul = 2 };

inline constexpr std::array<HaulSegment, 3> all_segments{
    HaulSegment::fronthaul, HaulSegment::midhaul, HaulSegment::backhaul};

constexpr std::size_t segment_index(HaulSegment s) { return static_cast<std::size_t>(s); }
const char* to_string(HaulSegment s);

// Per-segment factors and hop counts. Router hops exist only on the backhaul.
struct HaulParams {
    HaulSegment segment = HaulSegment::fronthaul;
    double alpha = 2.0;
    double sigma = 1.5;
    double rho = 1.0;
    int hops_switch = 0;
    int hops_link = 0;
    int hops_router = 0;
};

// All per-bit components of one evaluation. The sums are exact: e_total is
// assembled from the parts in one fixed order with no independent rounding.
struct EnergyBreakdown {
    double e_w = 0.0;  // wireless uplink, J/bit
    double e_e = 0.0;  // RU electronics
    double e_ra = 0.0; // = e_w + e_e
    std::array<double, 4> e_b_by_unit{};  // BBP energy, nonzero only at the BBP unit
    double e_pr = 0.0; // = sum of e_b_by_unit
    std::array<double, 4> e_eq_by_unit{}; // node transport equipment
    double e_fh = 0.0;
    double e_mh = 0.0;
    double e_bh = 0.0;
    double e_tr = 0.0;    // = e_fh + e_mh + e_bh + sum of e_eq_by_unit
    double e_total = 0.0; // = e_ra + e_pr + e_tr
};

struct RadioEnergy {
    double e_w = 0.0;
    double e_e = 0.0;
    double e_ra = 0.0;
};

// e_e = n_ru * radio_power / c_u. The wireless term e_w is a configured
// constant per user bit and is never scaled by eCPRI expansion.
RadioEnergy radio_energy(double e_w_j_per_bit, int n_ru, double radio_power_w,
                         const TrafficModel& traffic);

// gamma for BBP: eCPRI bits processed per user bit, c_n / c_u.
double gamma_processing(const TrafficModel& traffic);

// BBP energy per user bit at a unit:
//   alpha * sigma * rho * (c_n/c_u) * server_total_power / server_capacity.
// Throws ValidationError when the unit has no server.
double processing_energy(const UnitParams& unit, const TrafficModel& traffic);

// gamma for node equipment: units the eCPRI stream still traverses run at
// coverage-deployed full rate (rho * c_n/c_u); at and after the BBP unit the
// shared packet network carries plain user traffic (gamma = 1).
double gamma_equipment(bool unit_is_pre_bbp, double rho, const TrafficModel& traffic);

// Equipment energy per bit at a unit: alpha * sigma * gamma * P_I / C_I.
double equipment_energy(const UnitParams& unit, double gamma);

// gamma for a transmission segment, selected by the BBP location:
//   fronthaul: 1 when BBP is at the RU, else rho * c_n/c_u
//   midhaul:   rho * c_n/c_u when BBP is at CU or DC, else 1
//   backhaul:  rho * c_n/c_u when BBP is at the DC, else 1
double gamma_haul(HaulSegment segment, NodalUnit bbp_location, double rho,
                  const TrafficModel& traffic);

// Transmission energy of one segment:
//   alpha * sigma * gamma * (xi_switch + xi_link [+ xi_router])
// with xi_switch = (hops_switch+1) P_S/C_S, xi_link = hops_link P_L/C_L and,
// on the backhaul only, xi_router = (hops_router+1) P_R/C_R. Fronthaul and
// midhaul traverse access switches, the backhaul core switches.
double haul_energy(const HaulParams& params, double gamma, const Catalog& catalog);

// Assemble the breakdown; all sum invariants hold exactly.
EnergyBreakdown total_energy(const RadioEnergy& radio,
                             const std::array<double, 4>& e_b_by_unit,
                             const std::array<double, 4>& e_eq_by_unit,
                             double e_fh, double e_mh, double e_bh);

} // namespace ranergy
