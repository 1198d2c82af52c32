#include "ranergy/trend.hpp"

#include <cmath>

#include "ranergy/errors.hpp"

namespace ranergy {

double project(const TrendParams& params, double t) {
    if (!(params.e0 > 0.0)) throw DomainError("trend: e0 must be > 0");
    if (!(params.mu < 1.0)) throw DomainError("trend: mu must be < 1");
    return params.e0 * std::pow(1.0 - params.mu, t - params.t0);
}

FitResult fit(std::span<const TrendSample> samples, double t0) {
    if (samples.size() < 2) {
        throw DomainError("trend fit: need at least 2 samples");
    }
    bool distinct = false;
    for (const auto& s : samples) {
        if (!(s.value > 0.0)) {
            throw DomainError("trend fit: all values must be > 0 for the log-domain fit");
        }
        distinct = distinct || s.year != samples[0].year;
    }
    if (!distinct) {
        throw DomainError("trend fit: need at least 2 distinct years");
    }

    // Two-pass OLS of y = ln(value) on x = year - t0.
    const double n = static_cast<double>(samples.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& s : samples) {
        mean_x += (s.year - t0) / n;
        mean_y += std::log(s.value) / n;
    }
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto& s : samples) {
        const double dx = (s.year - t0) - mean_x;
        const double dy = std::log(s.value) - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;

    FitResult result;
    result.params.e0 = std::exp(intercept);
    result.params.mu = 1.0 - std::exp(slope);
    result.params.t0 = t0;
    if (syy == 0.0) {
        result.r_squared = 1.0; // constant data, perfectly explained by slope 0
    } else {
        double ss_res = 0.0;
        for (const auto& s : samples) {
            const double r = std::log(s.value) - (intercept + slope * (s.year - t0));
            ss_res += r * r;
        }
        const double r2 = 1.0 - ss_res / syy;
        result.r_squared = r2 < 0.0 ? 0.0 : (r2 > 1.0 ? 1.0 : r2);
    }
    return result;
}

} // namespace ranergy
