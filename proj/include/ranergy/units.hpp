#pragma once

namespace ranergy::units {

// All model math runs in SI base units: watts, bits per second, joules per bit.
// Config files and CSV output use the field conventions below.

inline constexpr double bps_per_gbps = 1e9;
inline constexpr double bits_per_gigabyte = 8e9;
inline constexpr double seconds_per_month = 30.0 * 24.0 * 3600.0; // fixed 30-day month
inline constexpr double nj_per_joule = 1e9;

constexpr double gbps_to_bps(double gbps) { return gbps * bps_per_gbps; }
constexpr double bps_to_gbps(double bps) { return bps / bps_per_gbps; }
constexpr double j_to_nj(double j) { return j * nj_per_joule; }
constexpr double nj_to_j(double nj) { return nj / nj_per_joule; }

} // namespace ranergy::units
