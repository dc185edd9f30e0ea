// Command-line laboratory around the greedy maximum-clique engine: solve and
// trace single instances, adjudicate against exact oracles, and run fuzzing,
// scaling, and ordering-search campaigns with machine-readable reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "omax/dimacs.hpp"
#include "omax/engine.hpp"
#include "omax/harness/fuzz.hpp"
#include "omax/harness/ordering.hpp"
#include "omax/harness/scaling.hpp"
#include "omax/harness/verify.hpp"
#include "omax/oracle.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << content;
}

// Primary document goes to --output when given, stdout otherwise.
void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty())
        std::cout << content;
    else
        write_file(output_path, content);
}

std::string seq_text(const std::vector<int>& seq) {
    std::string out = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(seq[i]);
    }
    return out + "]";
}

const char* outcome_name(omax::outcome_kind kind) {
    switch (kind) {
        case omax::outcome_kind::complete_shortcut: return "complete_shortcut";
        case omax::outcome_kind::null_shortcut: return "null_shortcut";
        default: return "general";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"omax: greedy maximum-clique engine with exact oracles and a differential-testing lab"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t seed = 1;
    std::string output_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "base seed for campaigns");
    app.add_option("--output", output_path, "write the primary output to a file instead of stdout");

    auto* solve = app.add_subcommand("solve", "run the greedy engine on a DIMACS instance");
    std::string solve_path;
    solve->add_option("file", solve_path, "DIMACS instance")->required();

    auto* oracle = app.add_subcommand("oracle", "run an exact solver on a DIMACS instance");
    std::string oracle_path, oracle_kind = "brute";
    long long oracle_budget = omax::default_bnb_node_budget;
    oracle->add_option("file", oracle_path, "DIMACS instance")->required();
    oracle->add_option("--oracle", oracle_kind, "exact solver")->check(CLI::IsMember({"brute", "bnb"}));
    oracle->add_option("--budget", oracle_budget, "node budget for the bnb solver");

    auto* trace = app.add_subcommand("trace", "emit the per-step event log of a run");
    std::string trace_path;
    trace->add_option("file", trace_path, "DIMACS instance")->required();

    auto* fuzz = app.add_subcommand("fuzz", "differential campaign against the exact oracle");
    int fuzz_n_min = 8, fuzz_n_max = 14, fuzz_count = 500;
    std::vector<double> fuzz_p = {0.3, 0.5, 0.7};
    long long fuzz_budget = omax::default_bnb_node_budget;
    std::string fuzz_csv;
    fuzz->add_option("--n-min", fuzz_n_min, "smallest order");
    fuzz->add_option("--n-max", fuzz_n_max, "largest order");
    fuzz->add_option("--p", fuzz_p, "edge probabilities (repeatable)");
    fuzz->add_option("--count", fuzz_count, "instances per (n,p) cell");
    fuzz->add_option("--budget", fuzz_budget, "oracle node budget for orders past the exhaustive cutoff");
    fuzz->add_option("--csv", fuzz_csv, "also write per-record CSV to this path");

    auto* scaling = app.add_subcommand("scaling", "wall-time scaling study");
    std::vector<int> scaling_n = {50, 100, 200, 400};
    double scaling_p = 0.5;
    int scaling_repeats = 5;
    std::string scaling_csv;
    scaling->add_option("--n", scaling_n, "instance orders, ascending (at least 4)");
    scaling->add_option("--p", scaling_p, "edge probability");
    scaling->add_option("--repeats", scaling_repeats, "seeded instances per order");
    scaling->add_option("--csv", scaling_csv, "also write per-record CSV to this path");

    auto* orderings = app.add_subcommand("orderings", "exhaustive vertex-ordering search");
    std::string orderings_path, orderings_mode = "both";
    int sweep_order = 0;
    orderings->add_option("file", orderings_path, "DIMACS instance");
    orderings->add_option("--mode", orderings_mode, "ordering space")
        ->check(CLI::IsMember({"all", "degree_respecting", "both"}));
    orderings->add_option("--sweep-order", sweep_order,
                          "instead of a file, sweep every labeled graph of this order (max 5)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            omax::graph g = omax::parse_dimacs(read_file(solve_path));
            omax::run_result rr = omax::run(g);
            if (format == "json") {
                nlohmann::json j = {{"omega", rr.omega_stored},
                                    {"clique", rr.lc_stored},
                                    {"sub_iterations", rr.sub_iteration_count},
                                    {"outcome", outcome_name(rr.outcome)}};
                emit(output_path, j.dump(2) + "\n");
            } else {
                emit(output_path, "omega=" + std::to_string(rr.omega_stored) +
                                      " clique=" + seq_text(rr.lc_stored) +
                                      " sub_iterations=" + std::to_string(rr.sub_iteration_count) + "\n");
            }
        } else if (*oracle) {
            omax::graph g = omax::parse_dimacs(read_file(oracle_path));
            if (oracle_kind == "brute" && g.order() > omax::brute_force_max_order) {
                std::cerr << "error: order " << g.order() << " exceeds the exhaustive oracle guard of "
                          << omax::brute_force_max_order << "; use --oracle=bnb\n";
                return 1;
            }
            omax::oracle_result res = oracle_kind == "brute"
                                          ? omax::brute_force_omega(g)
                                          : omax::branch_and_bound_omega(g, oracle_budget);
            if (format == "json") {
                nlohmann::json j = {{"omega", res.omega},
                                    {"witness", res.witness},
                                    {"nodes_explored", res.nodes_explored},
                                    {"oracle", oracle_kind}};
                emit(output_path, j.dump(2) + "\n");
            } else {
                emit(output_path, "omega=" + std::to_string(res.omega) +
                                      " witness=" + seq_text(res.witness) +
                                      " nodes=" + std::to_string(res.nodes_explored) + "\n");
            }
        } else if (*trace) {
            omax::graph g = omax::parse_dimacs(read_file(trace_path));
            omax::engine_config cfg;
            cfg.trace_enabled = true;
            omax::run_result rr = omax::run(g, cfg);
            emit(output_path, omax::trace_to_text(*rr.trace));
        } else if (*fuzz) {
            omax::fuzz_params params;
            params.n_min = fuzz_n_min;
            params.n_max = fuzz_n_max;
            params.p_list = fuzz_p;
            params.count_per_cell = fuzz_count;
            params.base_seed = seed;
            params.bnb_node_budget = fuzz_budget;
            omax::fuzz_report report = omax::run_fuzz_campaign(params);
            if (!fuzz_csv.empty())
                write_file(fuzz_csv, omax::fuzz_report_csv(report));
            if (format == "json") {
                emit(output_path, omax::fuzz_report_json(report).dump(2) + "\n");
            } else {
                std::string text;
                for (const auto& a : report.aggregates) {
                    std::ostringstream line;
                    line << "cell n=" << a.n << " p=" << a.p << ": exact " << a.exact_count << "/"
                         << a.adjudicated << " (rate " << a.exactness_rate << "), max gap "
                         << a.max_gap << "\n";
                    text += line.str();
                }
                text += "counterexamples: " + std::to_string(report.counterexamples.size()) + "\n";
                text += std::string("internal checks: ") + (report.all_verified ? "all passed" : "FAILED") + "\n";
                emit(output_path, text);
            }
        } else if (*scaling) {
            omax::scaling_params params;
            params.n_list = scaling_n;
            params.p = scaling_p;
            params.repeats = scaling_repeats;
            params.seed = seed;
            omax::scaling_report report = omax::run_scaling_study(params);
            if (!scaling_csv.empty())
                write_file(scaling_csv, omax::scaling_report_csv(report));
            if (format == "json") {
                emit(output_path, omax::scaling_report_json(report).dump(2) + "\n");
            } else {
                std::string text;
                for (const auto& p : report.per_n) {
                    std::ostringstream line;
                    line << "n=" << p.n << ": median " << p.median_time_ms << " ms, sub-iterations "
                         << p.median_sub_iterations << "\n";
                    text += line.str();
                }
                std::ostringstream tail;
                tail << "fitted log-log slope: " << report.fitted_slope << "\n"
                     << "sub-iteration counts consistent: " << (report.counts_consistent ? "yes" : "NO")
                     << "\n";
                text += tail.str();
                emit(output_path, text);
            }
        } else if (*orderings) {
            if ((sweep_order > 0) == !orderings_path.empty()) {
                std::cerr << "error: give either an instance file or --sweep-order\n";
                return 1;
            }
            nlohmann::json j;
            std::string text;
            if (sweep_order > 0) {
                omax::ordering_sweep_report report = omax::ordering_sweep_all_graphs(sweep_order);
                j = omax::ordering_sweep_json(report);
                std::ostringstream line;
                line << "graphs of order " << report.order << ": " << report.graphs << "\n"
                     << "some unrestricted ordering exact: " << report.exact_unrestricted
                     << " (fraction " << report.fraction_unrestricted << ")\n"
                     << "some degree-respecting ordering exact: " << report.exact_degree_respecting
                     << " (fraction " << report.fraction_degree_respecting << ")\n"
                     << "degree mode itself exact: " << report.exact_degree_mode << " (fraction "
                     << report.fraction_degree_mode << ")\n";
                text = line.str();
            } else {
                omax::graph g = omax::parse_dimacs(read_file(orderings_path));
                if (orderings_mode == "both") {
                    omax::ordering_record rec = omax::analyze_graph_orderings(g, orderings_path);
                    j = {{"schema_version", omax::ordering_report_schema_version},
                         {"kind", "orderings"},
                         {"params", {{"file", orderings_path}, {"mode", orderings_mode}}},
                         {"records", nlohmann::json::array({omax::ordering_record_json(rec)})}};
                    std::ostringstream line;
                    line << "oracle omega: " << rec.oracle_omega
                         << ", degree mode omega: " << rec.degree_mode_omega << "\n"
                         << "unrestricted: " << rec.exact_count_unrestricted << "/"
                         << rec.total_unrestricted << " orderings exact\n"
                         << "degree-respecting: " << rec.exact_count_degree_respecting << "/"
                         << rec.total_degree_respecting << " orderings exact\n";
                    text = line.str();
                } else {
                    omax::ordering_space space = orderings_mode == "all"
                                                     ? omax::ordering_space::all
                                                     : omax::ordering_space::degree_respecting;
                    omax::ordering_search_result res = omax::ordering_search(g, space);
                    j = {{"schema_version", omax::ordering_report_schema_version},
                         {"kind", "orderings"},
                         {"params", {{"file", orderings_path}, {"mode", orderings_mode}}},
                         {"records",
                          nlohmann::json::array({{{"graph_id", orderings_path},
                                                  {"n", g.order()},
                                                  {"oracle_omega", res.oracle_omega},
                                                  {"degree_mode_omega", res.degree_mode_omega},
                                                  {"space", omax::ordering_space_name(res.space)},
                                                  {"orderings_tested", res.orderings_tested},
                                                  {"exact_count", res.exact_count},
                                                  {"any_exact", res.any_exact}}})}};
                    std::ostringstream line;
                    line << "oracle omega: " << res.oracle_omega
                         << ", degree mode omega: " << res.degree_mode_omega << "\n"
                         << omax::ordering_space_name(res.space) << ": " << res.exact_count << "/"
                         << res.orderings_tested << " orderings exact\n";
                    text = line.str();
                }
            }
            emit(output_path, format == "json" ? j.dump(2) + "\n" : text);
        }
    } catch (const omax::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
