#include "ranergy/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ranergy/errors.hpp"

namespace ranergy {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

const char* palette(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return colors[i % (sizeof(colors) / sizeof(colors[0]))];
}

} // namespace

std::string render_line_chart(std::span<const ChartSeries> series, const ChartOptions& options) {
    if (series.empty()) throw DomainError("chart: no series");

    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size()) throw DomainError("chart: series size mismatch");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (options.log_y && !(s.y[i] > 0.0)) {
                throw DomainError("chart: log-y needs positive values");
            }
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            y_min = std::min(y_min, s.y[i]);
            y_max = std::max(y_max, s.y[i]);
        }
    }
    if (!(x_max >= x_min) || !(y_max >= y_min)) throw DomainError("chart: empty series");
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min == 0.0 ? 1.0 : y_min * 1.01 + 1e-300;

    const double ml = 80.0, mr = 150.0, mt = 40.0, mb = 50.0;
    const double pw = options.width - ml - mr;
    const double ph = options.height - mt - mb;

    auto ty = [&](double v) {
        double t;
        if (options.log_y) {
            t = (std::log10(v) - std::log10(y_min)) / (std::log10(y_max) - std::log10(y_min));
        } else {
            t = (v - y_min) / (y_max - y_min);
        }
        return mt + ph * (1.0 - t);
    };
    auto tx = [&](double v) { return ml + pw * (v - x_min) / (x_max - x_min); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) +
           "\" height=\"" + std::to_string(options.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt(ml) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">" +
           options.title + "</text>\n";

    // axes
    svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) + "\" y2=\"" +
           fmt(mt + ph) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" + fmt(ml + pw) +
           "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 4.0;
        svg += "<text x=\"" + fmt(tx(fx)) + "\" y=\"" + fmt(mt + ph + 18) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               fmt_tick(fx) + "</text>\n";
        double fy;
        if (options.log_y) {
            fy = std::pow(10.0, std::log10(y_min) + (std::log10(y_max) - std::log10(y_min)) * i / 4.0);
        } else {
            fy = y_min + (y_max - y_min) * i / 4.0;
        }
        svg += "<text x=\"" + fmt(ml - 6) + "\" y=\"" + fmt(ty(fy) + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
               fmt_tick(fy) + "</text>\n";
    }
    svg += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(mt + ph + 38) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
           options.x_label + "</text>\n";
    svg += "<text x=\"18\" y=\"" + fmt(mt + ph / 2) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           fmt(mt + ph / 2) + ")\">" + options.y_label + "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        std::string pts;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            pts += fmt(tx(s.x[i])) + ',' + fmt(ty(s.y[i]));
            if (i + 1 != s.x.size()) pts += ' ';
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(palette(si)) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        const double ly = mt + 16.0 + 18.0 * static_cast<double>(si);
        svg += "<line x1=\"" + fmt(ml + pw + 10) + "\" y1=\"" + fmt(ly - 4) + "\" x2=\"" +
               fmt(ml + pw + 34) + "\" y2=\"" + fmt(ly - 4) + "\" stroke=\"" + palette(si) +
               "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + fmt(ml + pw + 40) + "\" y=\"" + fmt(ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace ranergy
