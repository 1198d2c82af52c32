#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ranergy/access.hpp"
#include "ranergy/chart.hpp"
#include "ranergy/config.hpp"
#include "ranergy/csv.hpp"
#include "ranergy/errors.hpp"
#include "ranergy/scenario.hpp"
#include "ranergy/trend.hpp"
#include "ranergy/units.hpp"

namespace {

using namespace ranergy;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw IoError("error writing '" + path + "'");
}

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open input file '" + path + "'");
        buffer << in.rdbuf();
        if (in.bad()) throw IoError("error reading '" + path + "'");
    }
    return buffer.str();
}

RunConfig resolve_config(const std::string& config_path, bool lenient) {
    if (config_path.empty()) return default_config();
    return load_config_file(config_path, lenient);
}

// "1M:1G:log" or "500K:2G:lin:40"; suffixes K/M/G scale bits per second.
struct RateSpec {
    double lo = 1e6;
    double hi = 1e9;
    bool log_spaced = true;
    int points = 25;
};

double parse_rate(const std::string& s) {
    if (s.empty()) throw SchemaError("--rates: empty bound");
    double scale = 1.0;
    std::string num = s;
    switch (s.back()) {
        case 'K': case 'k': scale = 1e3; num.pop_back(); break;
        case 'M': case 'm': scale = 1e6; num.pop_back(); break;
        case 'G': case 'g': scale = 1e9; num.pop_back(); break;
        default: break;
    }
    try {
        return std::stod(num) * scale;
    } catch (const std::exception&) {
        throw SchemaError("--rates: cannot parse rate '" + s + "'");
    }
}

RateSpec parse_rate_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 3 || parts.size() > 4) {
        throw SchemaError("--rates: expected <lo>:<hi>:<log|lin>[:<points>]");
    }
    RateSpec spec;
    spec.lo = parse_rate(parts[0]);
    spec.hi = parse_rate(parts[1]);
    if (parts[2] == "log") {
        spec.log_spaced = true;
    } else if (parts[2] == "lin") {
        spec.log_spaced = false;
    } else {
        throw SchemaError("--rates: spacing must be 'log' or 'lin', got '" + parts[2] + "'");
    }
    if (parts.size() == 4) {
        try {
            spec.points = std::stoi(parts[3]);
        } catch (const std::exception&) {
            throw SchemaError("--rates: cannot parse point count '" + parts[3] + "'");
        }
    }
    return spec;
}

std::vector<ScenarioId> parse_scenarios(const std::string& csv) {
    std::vector<ScenarioId> ids;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        if (!cur.empty()) ids.push_back(scenario_from_string(cur));
    }
    if (ids.empty()) throw SchemaError("--scenarios: no scenario named");
    return ids;
}

std::vector<AccessTechProfile> load_profiles_file(const std::string& path, bool lenient) {
    const std::string text = read_input(path);
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("profiles: not valid JSON: ") + e.what());
    }
    nlohmann::json wrapper;
    if (root.is_array()) {
        wrapper = nlohmann::json::object();
        wrapper["profiles"] = root;
    } else {
        wrapper = root;
    }
    // Reuse the config loader so schema handling and validation stay in one place.
    RunConfig carrier = load_config_text(wrapper.dump(), lenient);
    return carrier.profiles;
}

std::string chart_path(const std::string& out, const char* suffix) {
    const auto dot = out.rfind('.');
    const std::string stem = dot == std::string::npos ? out : out.substr(0, dot);
    return stem + "_" + suffix + ".svg";
}

void emit_charts(const std::vector<SweepPoint>& points, std::span<const ScenarioId> ids,
                 const std::string& out, bool log_y) {
    struct Panel {
        const char* suffix;
        const char* title;
    };
    const Panel panels[] = {
        {"processing", "Processing energy vs densification"},
        {"radio_transport", "Radio + transport energy vs densification"},
        {"total", "Total energy vs densification"},
    };
    for (int panel = 0; panel < 3; ++panel) {
        std::vector<ChartSeries> series(ids.size());
        for (std::size_t si = 0; si < ids.size(); ++si) {
            series[si].label = to_string(ids[si]);
            for (const auto& point : points) {
                for (const auto& [id, b] : point.breakdowns) {
                    if (id != ids[si]) continue;
                    double v = 0.0;
                    if (panel == 0) v = b.e_pr;
                    if (panel == 1) v = b.e_ra + b.e_tr;
                    if (panel == 2) v = b.e_total;
                    series[si].x.push_back(point.n_ru);
                    series[si].y.push_back(units::j_to_nj(v));
                }
            }
        }
        ChartOptions options;
        options.title = panels[panel].title;
        options.x_label = "deployed RUs";
        options.y_label = "nJ/bit";
        options.log_y = log_y;
        write_output(chart_path(out, panels[panel].suffix),
                     render_line_chart(series, options));
    }
}

int cmd_sweep(const std::string& config_path, bool lenient, const std::string& out,
              const std::string& scenarios_csv, bool chart, bool log_y) {
    const RunConfig config = resolve_config(config_path, lenient);
    const std::vector<ScenarioId> ids =
        scenarios_csv.empty() ? std::vector<ScenarioId>(all_scenarios.begin(), all_scenarios.end())
                              : parse_scenarios(scenarios_csv);
    const std::vector<SweepPoint> points = sweep(ids, config);
    write_output(out, sweep_csv(points));
    if (chart) {
        if (out == "-") throw SchemaError("--chart requires --out <file> to derive chart paths");
        emit_charts(points, ids, out, log_y);
    }
    return 0;
}

int cmd_access(const std::string& config_path, bool lenient, const std::string& rates,
               const std::string& profiles_path, const std::string& out) {
    const RunConfig config = resolve_config(config_path, lenient);
    const std::vector<AccessTechProfile> profiles =
        profiles_path.empty() ? config.profiles : load_profiles_file(profiles_path, lenient);
    const RateSpec spec = rates.empty() ? RateSpec{} : parse_rate_spec(rates);
    const std::vector<double> grid = rate_grid(spec.lo, spec.hi, spec.points, spec.log_spaced);
    write_output(out, access_csv(compare_technologies(profiles, grid)));
    return 0;
}

int cmd_trend_fit(const std::string& input, double t0) {
    const std::vector<TrendSample> samples = parse_trend_samples_csv(read_input(input));
    write_output("-", trend_fit_csv(fit(samples, t0)));
    return 0;
}

int cmd_trend_project(double e0, double mu, double t0, double from, double to) {
    TrendParams params{e0, mu, t0};
    write_output("-", trend_projection_csv(params, from, to));
    return 0;
}

int cmd_validate(const std::string& config_path, bool lenient) {
    const RunConfig config = resolve_config(config_path, lenient);
    validate(config); // load_config_file already validates; re-check built-ins too
    for (const auto& line : config.provenance) std::cout << line << '\n';
    std::cout << "ok: configuration is valid ("
              << (config_path.empty() ? "built-in defaults" : config_path) << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Per-bit energy accounting for RAN deployments: access comparison, "
                 "BBP-placement sweeps, and equipment-efficiency trend fitting"};
    app.require_subcommand(1);
    app.fallthrough(); // accept --config/--lenient after the subcommand too

    std::string config_path;
    bool lenient = false;
    app.add_option("--config", config_path, "JSON config overriding built-in defaults");
    app.add_flag("--lenient", lenient, "ignore unknown config keys");

    auto* sweep_cmd = app.add_subcommand("sweep", "densification sweep over all scenarios");
    std::string sweep_out = "-";
    std::string scenarios_csv;
    bool chart = false;
    bool log_y = false;
    sweep_cmd->add_option("--out", sweep_out, "output CSV path ('-' for stdout)");
    sweep_cmd->add_option("--scenarios", scenarios_csv, "comma list, e.g. S1,S3");
    sweep_cmd->add_flag("--chart", chart, "also write one SVG per panel next to --out");
    sweep_cmd->add_flag("--log-y", log_y, "log scale on chart y axes");

    auto* access_cmd = app.add_subcommand("access", "access-technology comparison");
    auto* compare_cmd = access_cmd->add_subcommand("compare", "energy per bit across access rates");
    std::string rates;
    std::string profiles_path;
    std::string access_out = "-";
    compare_cmd->add_option("--rates", rates, "<lo>:<hi>:<log|lin>[:<points>], default 1M:1G:log:25");
    compare_cmd->add_option("--profiles", profiles_path, "JSON file with technology profiles");
    compare_cmd->add_option("--out", access_out, "output CSV path ('-' for stdout)");
    access_cmd->require_subcommand(1);

    auto* trend_cmd = app.add_subcommand("trend", "equipment-efficiency trend model");
    trend_cmd->require_subcommand(1);
    auto* fit_cmd = trend_cmd->add_subcommand("fit", "log-domain least squares on year,value rows");
    std::string fit_input = "-";
    double fit_t0 = 2008.0;
    fit_cmd->add_option("input", fit_input, "CSV file ('-' for stdin)");
    fit_cmd->add_option("--t0", fit_t0, "reference year of e0");
    auto* project_cmd = trend_cmd->add_subcommand("project", "evaluate e0*(1-mu)^(t-t0)");
    double p_e0 = 0.0, p_mu = 0.0, p_t0 = 2008.0, p_from = 2008.0, p_to = 2030.0;
    project_cmd->add_option("--e0", p_e0, "value at t0")->required();
    project_cmd->add_option("--mu", p_mu, "annual improvement rate")->required();
    project_cmd->add_option("--t0", p_t0, "reference year");
    project_cmd->add_option("--from", p_from, "first year")->required();
    project_cmd->add_option("--to", p_to, "last year")->required();

    auto* validate_cmd = app.add_subcommand("validate", "check the config and report every value");

    try {
        app.parse(argc, argv);
        if (sweep_cmd->parsed()) {
            return cmd_sweep(config_path, lenient, sweep_out, scenarios_csv, chart, log_y);
        }
        if (compare_cmd->parsed()) {
            return cmd_access(config_path, lenient, rates, profiles_path, access_out);
        }
        if (fit_cmd->parsed()) return cmd_trend_fit(fit_input, fit_t0);
        if (project_cmd->parsed()) return cmd_trend_project(p_e0, p_mu, p_t0, p_from, p_to);
        if (validate_cmd->parsed()) return cmd_validate(config_path, lenient);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ranergy::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
