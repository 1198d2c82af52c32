// Acceptance suite: prints one PASS/FAIL line per criterion and exits with the
// number of failures. Run it directly or through ctest.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ranergy/access.hpp"
#include "ranergy/catalog.hpp"
#include "ranergy/config.hpp"
#include "ranergy/csv.hpp"
#include "ranergy/scenario.hpp"
#include "ranergy/trend.hpp"
#include "ranergy/units.hpp"
#include "ranergy/xhaul.hpp"

using namespace ranergy;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& details) {
    std::printf("%s  %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), details.c_str());
    if (!ok) ++g_failures;
}

bool close_rel(double a, double b, double rel) {
    return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

// --- structural criteria -----------------------------------------------------

void criterion_sum_consistency() {
    const Catalog catalog = default_catalog();
    std::mt19937 rng(987654321);
    std::uniform_real_distribution<double> factor(1.0, 6.0);
    std::uniform_real_distribution<double> cov(0.01, 10.0);
    std::uniform_int_distribution<int> hops(0, 8);
    std::uniform_int_distribution<int> nru(1, 200);
    std::uniform_int_distribution<int> bbp_pick(0, 3);
    std::uniform_real_distribution<double> load(0.5, 200.0);

    const auto start = std::chrono::steady_clock::now();
    int bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n_ru = nru(rng);
        const TrafficModel traffic = make_traffic(load(rng), load(rng), n_ru, 1e9 * factor(rng));
        const NodalUnit bbp = static_cast<NodalUnit>(bbp_pick(rng));
        const RadioEnergy radio = radio_energy(25e-9, n_ru, 110.0, traffic);

        std::array<double, 4> e_b{};
        UnitParams host;
        host.alpha = factor(rng);
        host.sigma = factor(rng);
        host.rho = factor(rng);
        host.nic = catalog.device(DeviceRole::access_switch);
        host.server = bbp == NodalUnit::DC ? catalog.dc_server : catalog.edge_server;
        e_b[unit_index(bbp)] = processing_energy(host, traffic);

        std::array<double, 4> e_eq{};
        for (NodalUnit u : all_units) {
            UnitParams unit;
            unit.alpha = factor(rng);
            unit.sigma = factor(rng);
            unit.nic = catalog.device(DeviceRole::access_switch);
            unit.server = catalog.edge_server;
            const bool pre = unit_index(u) < unit_index(bbp);
            e_eq[unit_index(u)] = equipment_energy(unit, gamma_equipment(pre, cov(rng), traffic));
        }

        std::array<double, 3> e_haul{};
        for (HaulSegment seg : all_segments) {
            HaulParams params;
            params.segment = seg;
            params.alpha = factor(rng);
            params.sigma = factor(rng);
            params.hops_switch = hops(rng);
            params.hops_link = hops(rng);
            params.hops_router = seg == HaulSegment::backhaul ? hops(rng) : 0;
            e_haul[segment_index(seg)] =
                haul_energy(params, gamma_haul(seg, bbp, cov(rng), traffic), catalog);
        }

        const EnergyBreakdown b = total_energy(radio, e_b, e_eq, e_haul[0], e_haul[1], e_haul[2]);
        const double eq_sum =
            ((b.e_eq_by_unit[0] + b.e_eq_by_unit[1]) + b.e_eq_by_unit[2]) + b.e_eq_by_unit[3];
        const double pr_sum =
            ((b.e_b_by_unit[0] + b.e_b_by_unit[1]) + b.e_b_by_unit[2]) + b.e_b_by_unit[3];
        const bool exact = b.e_ra == b.e_w + b.e_e && b.e_pr == pr_sum &&
                           b.e_tr == ((b.e_fh + b.e_mh) + b.e_bh) + eq_sum &&
                           b.e_total == b.e_ra + b.e_pr + b.e_tr;
        if (!exact) ++bad;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char details[160];
    std::snprintf(details, sizeof(details),
                  "10000 randomized configs, %d exactness violations, %.2f s (< 5 s)", bad, secs);
    report(bad == 0 && secs < 5.0, "sum-consistency", details);
}

void criterion_du_count(const std::vector<SweepPoint>& points) {
    const bool map_ok =
        du_count(1) == 1 && du_count(4) == 1 && du_count(5) == 2 && du_count(100) == 25;
    int lo = 1 << 30, hi = 0;
    for (const auto& p : points) {
        lo = std::min(lo, p.n_du);
        hi = std::max(hi, p.n_du);
    }
    char details[160];
    std::snprintf(details, sizeof(details),
                  "du_count {1->1, 4->1, 5->2, 100->25} %s; sweep n_du spans %d..%d",
                  map_ok ? "ok" : "WRONG", lo, hi);
    report(map_ok && lo == 1 && hi == 25, "du-count-rule", details);
}

const EnergyBreakdown& breakdown(const SweepPoint& p, ScenarioId id) {
    for (const auto& [sid, b] : p.breakdowns) {
        if (sid == id) return b;
    }
    throw std::runtime_error("scenario missing from sweep point");
}

void criterion_s1_transport_constant(const std::vector<SweepPoint>& points) {
    const double first = breakdown(points.front(), ScenarioId::S1).e_tr;
    bool constant = true;
    for (const auto& p : points) {
        constant = constant && breakdown(p, ScenarioId::S1).e_tr == first;
    }
    char details[160];
    std::snprintf(details, sizeof(details), "e_tr(S1) bitwise constant at %.4f nJ/bit over 100 points%s",
                  units::j_to_nj(first), constant ? "" : " -- VARIES");
    report(constant, "s1-transport-constant", details);
}

void criterion_s2_steps(const std::vector<SweepPoint>& points) {
    bool ok = true;
    int jumps = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double prev = breakdown(points[i - 1], ScenarioId::S2).e_pr;
        const double cur = breakdown(points[i], ScenarioId::S2).e_pr;
        const bool du_incremented = points[i].n_du > points[i - 1].n_du;
        if (du_incremented) {
            ok = ok && cur > prev;
            ++jumps;
        } else {
            ok = ok && cur <= prev;
        }
    }
    char details[160];
    std::snprintf(details, sizeof(details),
                  "e_pr(S2) strictly increases at all %d DU increments and never in between", jumps);
    report(ok && jumps == 24, "s2-step-structure", details);
}

void criterion_extremal_ordering(const std::vector<SweepPoint>& points) {
    bool ok = true;
    int first_bad = -1;
    for (const auto& p : points) {
        const double s1 = breakdown(p, ScenarioId::S1).e_pr;
        const double s2 = breakdown(p, ScenarioId::S2).e_pr;
        const double s3 = breakdown(p, ScenarioId::S3).e_pr;
        const double s4 = breakdown(p, ScenarioId::S4).e_pr;
        const bool point_ok = s1 > s2 && s1 > s3 && s1 > s4 && s4 < s2 && s4 < s3;
        if (!point_ok && first_bad < 0) first_bad = p.n_ru;
        ok = ok && point_ok;
    }
    char details[160];
    if (ok) {
        std::snprintf(details, sizeof(details),
                      "e_pr(S1) maximal and e_pr(S4) minimal at every of 100 sweep points");
    } else {
        std::snprintf(details, sizeof(details), "ordering violated first at n_ru=%d", first_bad);
    }
    report(ok, "processing-extremal-ordering", details);
}

void criterion_eq2_kernels() {
    const Catalog catalog = default_catalog();
    const TrafficModel unity{5e6, 5e6};
    UnitParams edge;
    edge.alpha = edge.sigma = edge.rho = 1.0;
    edge.nic = catalog.device(DeviceRole::access_switch);
    edge.server = catalog.edge_server;
    UnitParams dc = edge;
    dc.server = catalog.dc_server;
    const double e_edge = processing_energy(edge, unity);
    const double e_dc = processing_energy(dc, unity);
    const bool ok = close_rel(e_edge, 24e-9, 1e-12) && close_rel(e_dc, 22e-9, 1e-12);
    char details[160];
    std::snprintf(details, sizeof(details),
                  "unity-factor kernels: edge %.12g nJ/bit (24), dc %.12g nJ/bit (22), 1e-12 rel",
                  units::j_to_nj(e_edge), units::j_to_nj(e_dc));
    report(ok, "eq2-server-kernels", details);
}

void criterion_trend() {
    // noiseless recovery
    std::vector<TrendSample> exact;
    for (int y = 2008; y <= 2023; ++y) {
        exact.push_back({static_cast<double>(y), 50.0 * std::pow(0.8, y - 2008.0)});
    }
    const FitResult clean = fit(exact, 2008.0);
    bool ok = close_rel(clean.params.e0, 50.0, 1e-9) && close_rel(clean.params.mu, 0.2, 1e-9) &&
              std::fabs(clean.r_squared - 1.0) <= 1e-9;

    // noisy data against an independently formulated OLS oracle
    std::mt19937 rng(5150);
    std::normal_distribution<double> noise(0.0, 0.2);
    std::vector<TrendSample> noisy;
    for (int y = 2008; y <= 2023; ++y) {
        noisy.push_back(
            {static_cast<double>(y), 80.0 * std::pow(0.78, y - 2008.0) * std::exp(noise(rng))});
    }
    const double n = static_cast<double>(noisy.size());
    double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
    for (const auto& s : noisy) {
        const double x = s.year - 2008.0;
        const double y = std::log(s.value);
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    const double num = n * sxy - sx * sy;
    const double r2_oracle = (num * num) / ((n * sxx - sx * sx) * (n * syy - sy * sy));
    const FitResult dirty = fit(noisy, 2008.0);
    ok = ok && close_rel(dirty.params.mu, 1.0 - std::exp(slope), 1e-9) &&
         close_rel(dirty.params.e0, std::exp(intercept), 1e-9) &&
         close_rel(dirty.r_squared, r2_oracle, 1e-9);

    char details[200];
    std::snprintf(details, sizeof(details),
                  "noiseless (e0,mu)=(%.10g,%.10g) r2=%.12g; noisy fit matches independent OLS "
                  "oracle to 1e-9",
                  clean.params.e0, clean.params.mu, clean.r_squared);
    report(ok, "trend-fit", details);
}

// --- calibrated quantitative anchors ------------------------------------------

void criterion_crossover(const std::vector<SweepPoint>& points) {
    // settle point: first n_ru after which e_pr(S2) >= e_pr(S3) for the rest
    // of the sweep (a staircase necessarily weaves around a rising curve)
    int last_negative = 0;
    bool saw_negative = false;
    for (const auto& p : points) {
        const double d = breakdown(p, ScenarioId::S2).e_pr - breakdown(p, ScenarioId::S3).e_pr;
        if (d < 0.0) {
            last_negative = p.n_ru;
            saw_negative = true;
        }
    }
    const int settle = last_negative + 1;
    const bool ok = saw_negative && settle >= 20 && settle <= 40 && settle <= points.back().n_ru;
    char details[160];
    std::snprintf(details, sizeof(details),
                  "e_pr(S2)/e_pr(S3) ordering settles at n_ru=%d (target 30 +/- 10)", settle);
    report(ok, "s2-s3-crossover", details);
}

void criterion_total_savings(const std::vector<SweepPoint>& points) {
    const SweepPoint& last = points.back();
    const double s1 = breakdown(last, ScenarioId::S1).e_total;
    bool ok = true;
    char details[200];
    std::string text;
    for (ScenarioId id : {ScenarioId::S2, ScenarioId::S3, ScenarioId::S4}) {
        const double saving = 1.0 - breakdown(last, id).e_total / s1;
        ok = ok && saving >= 0.65 && saving <= 0.85;
        char piece[48];
        std::snprintf(piece, sizeof(piece), "%s %.1f%% ", to_string(id), 100.0 * saving);
        text += piece;
    }
    std::snprintf(details, sizeof(details), "totals at n_ru=100 below S1 by: %s(band 65..85%%)",
                  text.c_str());
    report(ok, "total-savings-at-full-densification", details);
}

void criterion_s1_transport_level(const std::vector<SweepPoint>& points) {
    const double level = breakdown(points.front(), ScenarioId::S1).e_tr;
    const bool ok = level >= 20e-9 && level <= 60e-9;
    char details[160];
    std::snprintf(details, sizeof(details), "e_tr(S1) = %.4f nJ/bit (anchor 40 nJ/bit +/- 50%%)",
                  units::j_to_nj(level));
    report(ok, "s1-transport-level", details);
}

void criterion_access_anchor(const RunConfig& config) {
    double pon = 0.0, oran = 0.0;
    for (const auto& p : config.profiles) {
        if (p.name == "PON") pon = access_energy_per_bit(p, 100e6);
        if (p.name == "O-RAN") oran = access_energy_per_bit(p, 100e6);
    }
    const double ratio = oran > pon ? oran / pon : pon / oran;
    const bool ok = pon > 0.0 && oran > 0.0 && ratio <= 2.0;
    char details[160];
    std::snprintf(details, sizeof(details),
                  "at 100 Mbps: O-RAN %.2f nJ/bit vs PON %.2f nJ/bit, ratio %.3f (<= 2)",
                  units::j_to_nj(oran), units::j_to_nj(pon), ratio);
    report(ok, "oran-pon-agreement", details);
}

void criterion_performance(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const auto points = sweep(all_scenarios, config);
    const std::string csv_a = sweep_csv(points);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string csv_b = sweep_csv(sweep(all_scenarios, config));
    const bool ok = secs < 1.0 && csv_a == csv_b && !csv_a.empty();
    char details[160];
    std::snprintf(details, sizeof(details),
                  "400-point sweep + CSV in %.3f s (< 1 s); two runs byte-identical: %s", secs,
                  csv_a == csv_b ? "yes" : "NO");
    report(ok, "sweep-performance-determinism", details);
}

} // namespace

int main() {
    const RunConfig config = default_config();
    const std::vector<SweepPoint> points = sweep(all_scenarios, config);

    std::printf("-- structural criteria --\n");
    criterion_sum_consistency();
    criterion_du_count(points);
    criterion_s1_transport_constant(points);
    criterion_s2_steps(points);
    criterion_extremal_ordering(points);
    criterion_eq2_kernels();
    criterion_trend();

    std::printf("-- calibrated quantitative anchors --\n");
    criterion_crossover(points);
    criterion_total_savings(points);
    criterion_s1_transport_level(points);
    criterion_access_anchor(config);

    std::printf("-- performance --\n");
    criterion_performance(config);

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
