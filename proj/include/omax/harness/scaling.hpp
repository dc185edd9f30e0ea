#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>

#include <json.hpp>

#include "omax/engine.hpp"
#include "omax/random.hpp"

namespace omax {

inline constexpr int scaling_report_schema_version = 1;

struct scaling_params {
    std::vector<int> n_list;  // ascending, at least 4 sizes
    double p = 0.5;
    int repeats = 3;  // seeded instances per size
    std::uint64_t seed = 0;
};

struct scaling_record {
    int n = 0;
    int repeat = 0;
    std::uint64_t seed = 0;
    double time_ms = 0.0;
    long long sub_iterations = 0;
    // what the iteration structure says the count must be:
    // sum of (r-1) over every prefix length r that did not extend in place
    long long expected_sub_iterations = 0;
};

struct scaling_per_n {
    int n = 0;
    double median_time_ms = 0.0;
    long long median_sub_iterations = 0;
};

struct scaling_report {
    scaling_params params;
    std::vector<scaling_record> records;
    std::vector<scaling_per_n> per_n;
    double fitted_slope = 0.0;  // least-squares slope of log(median time) vs log(n)
    bool counts_consistent = true;
};

namespace detail {

inline double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size();
    return k % 2 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

inline long long median_ll(std::vector<long long> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t k = x.size();
    double sx = 0, sy = 0;
    std::vector<double> lx(k), ly(k);
    for (std::size_t i = 0; i < k; ++i) {
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / k, my = sy / k;
    double num = 0, den = 0;
    for (std::size_t i = 0; i < k; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

inline long long expected_subs(int n, const std::vector<int>& extended_rs) {
    long long total = static_cast<long long>(n) * (n - 1) / 2;  // sum of r-1 for r=2..n
    for (int r : extended_rs)
        total -= r - 1;
    return total;
}

}  // namespace detail

// Wall-time scaling measurement: medians over seeded instances per size plus
// a machine-independent cost proxy (the sub-iteration count, checked against
// the value the iteration structure dictates).
inline scaling_report run_scaling_study(const scaling_params& params) {
    if (params.n_list.size() < 4)
        throw std::invalid_argument("scaling: need at least 4 sizes");
    if (!std::is_sorted(params.n_list.begin(), params.n_list.end()))
        throw std::invalid_argument("scaling: n_list must be ascending");
    if (params.repeats < 1)
        throw std::invalid_argument("scaling: repeats must be positive");

    scaling_report report;
    report.params = params;

    std::vector<double> sizes, medians;
    for (std::size_t ni = 0; ni < params.n_list.size(); ++ni) {
        const int n = params.n_list[ni];
        std::vector<double> times;
        std::vector<long long> subs;
        for (int rep = 0; rep < params.repeats; ++rep) {
            scaling_record rec;
            rec.n = n;
            rec.repeat = rep;
            rec.seed = derive_seed(params.seed, ni, static_cast<std::uint64_t>(rep));
            graph g = erdos_renyi(n, params.p, rec.seed);

            const auto t0 = std::chrono::steady_clock::now();
            run_result rr = run(g);
            const auto t1 = std::chrono::steady_clock::now();
            rec.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rec.sub_iterations = rr.sub_iteration_count;
            // shortcut runs have no iterations at all
            rec.expected_sub_iterations = rr.outcome == outcome_kind::general
                                              ? detail::expected_subs(n, rr.extended_rs)
                                              : 0;
            if (rec.sub_iterations != rec.expected_sub_iterations)
                report.counts_consistent = false;

            times.push_back(rec.time_ms);
            subs.push_back(rec.sub_iterations);
            report.records.push_back(rec);
        }
        scaling_per_n per;
        per.n = n;
        per.median_time_ms = detail::median(times);
        per.median_sub_iterations = detail::median_ll(subs);
        report.per_n.push_back(per);
        sizes.push_back(static_cast<double>(n));
        medians.push_back(std::max(per.median_time_ms, 1e-6));  // guard log(0)
    }
    report.fitted_slope = detail::loglog_slope(sizes, medians);
    return report;
}

inline nlohmann::json scaling_report_json(const scaling_report& report) {
    nlohmann::json j;
    j["schema_version"] = scaling_report_schema_version;
    j["kind"] = "scaling";
    j["params"] = {{"n_list", report.params.n_list},
                   {"p", report.params.p},
                   {"repeats", report.params.repeats},
                   {"seed", report.params.seed}};
    j["records"] = nlohmann::json::array();
    for (const auto& r : report.records)
        j["records"].push_back({{"n", r.n},
                                {"repeat", r.repeat},
                                {"seed", r.seed},
                                {"time_ms", r.time_ms},
                                {"sub_iterations", r.sub_iterations},
                                {"expected_sub_iterations", r.expected_sub_iterations}});
    j["aggregates"] = nlohmann::json::array();
    for (const auto& p : report.per_n)
        j["aggregates"].push_back({{"n", p.n},
                                   {"median_time_ms", p.median_time_ms},
                                   {"median_sub_iterations", p.median_sub_iterations}});
    j["fitted_slope"] = report.fitted_slope;
    j["counts_consistent"] = report.counts_consistent;
    return j;
}

// Fixed columns: n,repeat,seed,time_ms,sub_iterations,expected_sub_iterations
inline std::string scaling_report_csv(const scaling_report& report) {
    std::string out = "n,repeat,seed,time_ms,sub_iterations,expected_sub_iterations\n";
    for (const auto& r : report.records)
        out += std::to_string(r.n) + "," + std::to_string(r.repeat) + "," +
               std::to_string(r.seed) + "," + std::to_string(r.time_ms) + "," +
               std::to_string(r.sub_iterations) + "," +
               std::to_string(r.expected_sub_iterations) + "\n";
    return out;
}

}  // namespace omax
