#pragma once

#include <span>
#include <string>
#include <vector>

namespace ranergy {

// Minimal self-contained SVG line chart. CSV remains the contract; this is a
// convenience for eyeballing sweep results.
struct ChartSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
    int width = 720;
    int height = 480;
};

std::string render_line_chart(std::span<const ChartSeries> series, const ChartOptions& options);

} // namespace ranergy
