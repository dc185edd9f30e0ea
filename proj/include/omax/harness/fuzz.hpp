#pragma once

#include <json.hpp>

#include "omax/dimacs.hpp"
#include "omax/engine.hpp"
#include "omax/harness/verify.hpp"
#include "omax/oracle.hpp"
#include "omax/random.hpp"

namespace omax {

inline constexpr int fuzz_report_schema_version = 1;

// Instances up to this order are adjudicated by exhaustive enumeration;
// larger ones fall back to branch and bound under a node budget.
inline constexpr int fuzz_brute_oracle_cutoff = 20;

struct fuzz_params {
    int n_min = 0;
    int n_max = 0;
    std::vector<double> p_list;
    int count_per_cell = 0;
    std::uint64_t base_seed = 0;
    long long bnb_node_budget = default_bnb_node_budget;
};

struct fuzz_record {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int omega_max = 0;
    long long sub_iterations = 0;
    bool adjudicated = false;  // false when the oracle ran out of budget
    int oracle_omega = 0;      // valid only when adjudicated
    int gap = 0;               // oracle_omega - omega_max, >= 0 by soundness
    bool exact = false;
    bool verified = false;  // run passed verify_result
};

struct fuzz_cell_aggregate {
    int n = 0;
    double p = 0.0;
    int instances = 0;
    int adjudicated = 0;
    int exact_count = 0;
    int max_gap = 0;
    double exactness_rate = 0.0;  // exact / adjudicated
};

// Counterexamples carry the whole instance so a reported gap can be replayed
// from the file alone.
struct fuzz_counterexample {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int omega_max = 0;
    int oracle_omega = 0;
    int gap = 0;
    std::string dimacs;
};

struct fuzz_report {
    fuzz_params params;
    std::vector<fuzz_record> records;
    std::vector<fuzz_cell_aggregate> aggregates;
    std::vector<fuzz_counterexample> counterexamples;
    bool all_verified = true;
};

// Differential campaign: for every (n, p) cell, generate seeded instances,
// run the engine in degree mode against the exact oracle, and record the
// gaps. Instance seeds depend only on (base_seed, cell, index), so the
// report is a pure function of its parameters.
inline fuzz_report run_fuzz_campaign(const fuzz_params& params) {
    if (params.n_min < 1 || params.n_max < params.n_min)
        throw std::invalid_argument("fuzz: bad n range");
    if (params.p_list.empty() || params.count_per_cell < 1)
        throw std::invalid_argument("fuzz: need at least one p value and one instance per cell");

    fuzz_report report;
    report.params = params;

    std::uint64_t cell_id = 0;
    for (int n = params.n_min; n <= params.n_max; ++n) {
        for (double p : params.p_list) {
            fuzz_cell_aggregate agg;
            agg.n = n;
            agg.p = p;
            for (int i = 0; i < params.count_per_cell; ++i) {
                fuzz_record rec;
                rec.n = n;
                rec.p = p;
                rec.seed = derive_seed(params.base_seed, cell_id, static_cast<std::uint64_t>(i));
                graph g = erdos_renyi(n, p, rec.seed);

                engine_config cfg;
                cfg.trace_enabled = true;
                run_result rr = run(g, cfg);
                rec.omega_max = rr.omega_stored;
                rec.sub_iterations = rr.sub_iteration_count;
                rec.verified = verify_result(g, rr).passed;
                if (!rec.verified)
                    report.all_verified = false;

                try {
                    oracle_result oracle = n <= fuzz_brute_oracle_cutoff
                                               ? brute_force_omega(g)
                                               : branch_and_bound_omega(g, params.bnb_node_budget);
                    rec.adjudicated = true;
                    rec.oracle_omega = oracle.omega;
                    rec.gap = oracle.omega - rec.omega_max;
                    rec.exact = rec.gap == 0;
                } catch (const budget_exceeded&) {
                    rec.adjudicated = false;
                }

                agg.instances += 1;
                if (rec.adjudicated) {
                    agg.adjudicated += 1;
                    if (rec.exact)
                        agg.exact_count += 1;
                    agg.max_gap = std::max(agg.max_gap, rec.gap);
                    if (rec.gap > 0)
                        report.counterexamples.push_back(fuzz_counterexample{
                            n, p, rec.seed, rec.omega_max, rec.oracle_omega, rec.gap,
                            write_dimacs(g)});
                }
                report.records.push_back(rec);
            }
            agg.exactness_rate = agg.adjudicated == 0
                                     ? 0.0
                                     : static_cast<double>(agg.exact_count) / agg.adjudicated;
            report.aggregates.push_back(agg);
            ++cell_id;
        }
    }
    return report;
}

inline nlohmann::json fuzz_report_json(const fuzz_report& report) {
    nlohmann::json j;
    j["schema_version"] = fuzz_report_schema_version;
    j["kind"] = "fuzz";
    j["params"] = {{"n_min", report.params.n_min},
                   {"n_max", report.params.n_max},
                   {"p_list", report.params.p_list},
                   {"count_per_cell", report.params.count_per_cell},
                   {"base_seed", report.params.base_seed},
                   {"bnb_node_budget", report.params.bnb_node_budget}};
    j["records"] = nlohmann::json::array();
    for (const auto& r : report.records)
        j["records"].push_back({{"n", r.n},
                                {"p", r.p},
                                {"seed", r.seed},
                                {"omega_max", r.omega_max},
                                {"sub_iterations", r.sub_iterations},
                                {"adjudicated", r.adjudicated},
                                {"oracle_omega", r.adjudicated ? nlohmann::json(r.oracle_omega)
                                                               : nlohmann::json(nullptr)},
                                {"gap", r.adjudicated ? nlohmann::json(r.gap) : nlohmann::json(nullptr)},
                                {"exact", r.exact},
                                {"verified", r.verified}});
    j["aggregates"] = nlohmann::json::array();
    for (const auto& a : report.aggregates)
        j["aggregates"].push_back({{"n", a.n},
                                   {"p", a.p},
                                   {"instances", a.instances},
                                   {"adjudicated", a.adjudicated},
                                   {"exact_count", a.exact_count},
                                   {"max_gap", a.max_gap},
                                   {"exactness_rate", a.exactness_rate}});
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : report.counterexamples)
        j["counterexamples"].push_back({{"n", c.n},
                                        {"p", c.p},
                                        {"seed", c.seed},
                                        {"omega_max", c.omega_max},
                                        {"oracle_omega", c.oracle_omega},
                                        {"gap", c.gap},
                                        {"dimacs", c.dimacs}});
    j["all_verified"] = report.all_verified;
    return j;
}

// Fixed columns: n,p,seed,omega_max,oracle_omega,adjudicated,exact,gap,sub_iterations
inline std::string fuzz_report_csv(const fuzz_report& report) {
    std::string out = "n,p,seed,omega_max,oracle_omega,adjudicated,exact,gap,sub_iterations\n";
    for (const auto& r : report.records) {
        out += std::to_string(r.n) + "," + std::to_string(r.p) + "," + std::to_string(r.seed) +
               "," + std::to_string(r.omega_max) + ",";
        out += r.adjudicated ? std::to_string(r.oracle_omega) : std::string("");
        out += std::string(",") + (r.adjudicated ? "1" : "0") + "," + (r.exact ? "1" : "0") + ",";
        out += r.adjudicated ? std::to_string(r.gap) : std::string("");
        out += "," + std::to_string(r.sub_iterations) + "\n";
    }
    return out;
}

}  // namespace omax
