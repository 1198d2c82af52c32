#pragma once

#include <span>
#include <string>
#include <vector>

#include "ranergy/catalog.hpp"

namespace ranergy {

// Shared-equipment parameters of one access technology: terminal unit in the
// central office, remote node, and customer premises equipment.
struct AccessTechProfile {
    std::string name;
    double terminal_power_w = 0.0; // P_TU >= 0
    double users_per_terminal = 1; // N_TU >= 1
    double remote_power_w = 0.0;   // P_RN, 0 when the remote node is passive or absent
    double users_per_remote = 1;   // N_RN >= 1 (1 when there is no remote node)
    double cpe_power_w = 0.0;      // P_CPE >= 0
    bool calibration = false;      // placeholder values rather than datasheet-backed
};

// Per-user access energy at access rate r_u:
//   (2 / r_u) * (P_TU/N_TU + P_RN/N_RN + P_CPE/2), J/bit.
double access_energy_per_bit(const AccessTechProfile& profile, double access_rate_bps);

struct AccessComparisonRow {
    std::string tech;
    double rate_bps;
    double energy_j_per_bit;
};

// Full cross product, profile order x ascending rate.
std::vector<AccessComparisonRow> compare_technologies(
    std::span<const AccessTechProfile> profiles, std::span<const double> rates_bps);

// Grid of `points` rates from lo to hi inclusive, log- or linearly spaced.
std::vector<double> rate_grid(double lo_bps, double hi_bps, int points, bool log_spaced);

// Default technology set: O-RAN Split 8 and an LTE approximation built from the
// catalog, plus documented legacy placeholders for PON/PtP/FTTN/WiMAX.
std::vector<AccessTechProfile> default_profiles(const Catalog& catalog);

} // namespace ranergy
