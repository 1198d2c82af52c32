#pragma once

#include <span>

namespace ranergy {

// Exponential equipment-efficiency trend E(t) = e0 * (1 - mu)^(t - t0).
// The unit of e0 is carried opaquely; mu is the annual improvement rate.
struct TrendParams {
    double e0 = 0.0; // > 0
    double mu = 0.0; // < 1; fit() may return mu < 0 for worsening data
    double t0 = 0.0; // reference year (fractional years allowed)
};

struct TrendSample {
    double year = 0.0;
    double value = 0.0; // > 0, log-domain fit requires positivity
};

struct FitResult {
    TrendParams params;
    double r_squared = 0.0; // coefficient of determination in the log domain
};

// Evaluate the trend at year t; t < t0 back-projects.
double project(const TrendParams& params, double t);

// Ordinary least squares of ln(value) on (year - t0). The slope s maps to
// mu = 1 - exp(s) so that project(fit(...)) inverts exact exponential data.
// Requires at least two samples with two distinct years and positive values.
FitResult fit(std::span<const TrendSample> samples, double t0);

} // namespace ranergy
