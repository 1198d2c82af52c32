#pragma once

#include <span>
#include <string>
#include <vector>

#include "ranergy/access.hpp"
#include "ranergy/scenario.hpp"
#include "ranergy/trend.hpp"

namespace ranergy {

// Dot-decimal, 6 significant digits, C locale. Rejects non-finite values.
std::string format_number(double v);

// scenario,n_ru,n_du,n_cu,e_w,e_e,e_pr,e_eq,e_fh,e_mh,e_bh,e_tr,e_total
// (energies in nJ/bit, LF newlines)
std::string sweep_csv(std::span<const SweepPoint> points);

// tech,r_u_bps,e_u_nj_per_bit
std::string access_csv(std::span<const AccessComparisonRow> rows);

// e0,mu,r_squared
std::string trend_fit_csv(const FitResult& result);

// year,value for integer year steps from..to inclusive
std::string trend_projection_csv(const TrendParams& params, double from_year, double to_year);

// Two-column year,value input for `trend fit`; header row optional.
std::vector<TrendSample> parse_trend_samples_csv(const std::string& text);

} // namespace ranergy
