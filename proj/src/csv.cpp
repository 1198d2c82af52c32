#include "ranergy/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ranergy/errors.hpp"
#include "ranergy/units.hpp"

namespace ranergy {

std::string format_number(double v) {
    if (!std::isfinite(v)) throw DomainError("csv: refusing to serialize a non-finite value");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string sweep_csv(std::span<const SweepPoint> points) {
    std::string out = "scenario,n_ru,n_du,n_cu,e_w,e_e,e_pr,e_eq,e_fh,e_mh,e_bh,e_tr,e_total\n";
    for (const auto& point : points) {
        for (const auto& [id, b] : point.breakdowns) {
            const double e_eq =
                ((b.e_eq_by_unit[0] + b.e_eq_by_unit[1]) + b.e_eq_by_unit[2]) + b.e_eq_by_unit[3];
            out += to_string(id);
            out += ',' + std::to_string(point.n_ru);
            out += ',' + std::to_string(point.n_du);
            out += ',' + std::to_string(point.n_cu);
            for (double v : {b.e_w, b.e_e, b.e_pr, e_eq, b.e_fh, b.e_mh, b.e_bh, b.e_tr, b.e_total}) {
                out += ',' + format_number(units::j_to_nj(v));
            }
            out += '\n';
        }
    }
    return out;
}

std::string access_csv(std::span<const AccessComparisonRow> rows) {
    std::string out = "tech,r_u_bps,e_u_nj_per_bit\n";
    for (const auto& row : rows) {
        out += row.tech;
        out += ',' + format_number(row.rate_bps);
        out += ',' + format_number(units::j_to_nj(row.energy_j_per_bit));
        out += '\n';
    }
    return out;
}

std::string trend_fit_csv(const FitResult& result) {
    return "e0,mu,r_squared\n" + format_number(result.params.e0) + ',' +
           format_number(result.params.mu) + ',' + format_number(result.r_squared) + '\n';
}

std::string trend_projection_csv(const TrendParams& params, double from_year, double to_year) {
    if (to_year < from_year) throw DomainError("trend project: --to must be >= --from");
    std::string out = "year,value\n";
    for (double year = from_year; year <= to_year + 1e-9; year += 1.0) {
        out += format_number(year) + ',' + format_number(project(params, year)) + '\n';
    }
    return out;
}

std::vector<TrendSample> parse_trend_samples_csv(const std::string& text) {
    std::vector<TrendSample> samples;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line.find_first_not_of("0123456789.,+-eE \t") != std::string::npos) {
            continue; // header row
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw SchemaError("trend csv: line " + std::to_string(lineno) +
                              ": expected 'year,value'");
        }
        try {
            TrendSample s;
            s.year = std::stod(line.substr(0, comma));
            s.value = std::stod(line.substr(comma + 1));
            samples.push_back(s);
        } catch (const std::exception&) {
            throw SchemaError("trend csv: line " + std::to_string(lineno) +
                              ": could not parse numbers");
        }
    }
    return samples;
}

} // namespace ranergy
