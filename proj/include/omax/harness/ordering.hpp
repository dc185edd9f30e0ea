#pragma once

#include <algorithm>
#include <numeric>
#include <string>

#include <json.hpp>

#include "omax/engine.hpp"
#include "omax/oracle.hpp"

namespace omax {

inline constexpr int ordering_report_schema_version = 1;
inline constexpr int ordering_search_max_order = 8;

enum class ordering_space { all, degree_respecting };

inline const char* ordering_space_name(ordering_space space) {
    return space == ordering_space::all ? "all" : "degree_respecting";
}

struct ordering_search_result {
    ordering_space space = ordering_space::all;
    int oracle_omega = 0;
    int degree_mode_omega = 0;
    long long orderings_tested = 0;
    long long exact_count = 0;
    bool any_exact = false;
};

namespace detail {

inline bool respects_degrees(const graph& g, const ordered_set& order) {
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (g.degree(order[i]) < g.degree(order[i + 1]))
            return false;
    return true;
}

}  // namespace detail

// Enumerates every vertex ordering in the chosen space and counts those under
// which the engine attains the exact clique number.
inline ordering_search_result ordering_search(const graph& g, ordering_space space) {
    if (g.order() > ordering_search_max_order)
        throw std::invalid_argument("ordering_search: order " + std::to_string(g.order()) +
                                    " exceeds guard of " + std::to_string(ordering_search_max_order));
    ordering_search_result res;
    res.space = space;
    res.oracle_omega = brute_force_omega(g).omega;
    res.degree_mode_omega = run(g).omega_stored;

    ordered_set perm(g.order());
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (space == ordering_space::degree_respecting && !detail::respects_degrees(g, perm))
            continue;
        ++res.orderings_tested;
        if (run_with_ordering(g, perm).omega_stored == res.oracle_omega)
            ++res.exact_count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    res.any_exact = res.exact_count > 0;
    return res;
}

// Per-graph record combining both ordering spaces.
struct ordering_record {
    std::string graph_id;
    int n = 0;
    int oracle_omega = 0;
    int degree_mode_omega = 0;
    bool any_exact_unrestricted = false;
    long long exact_count_unrestricted = 0;
    long long total_unrestricted = 0;
    bool any_exact_degree_respecting = false;
    long long exact_count_degree_respecting = 0;
    long long total_degree_respecting = 0;
};

inline ordering_record analyze_graph_orderings(const graph& g, std::string graph_id) {
    ordering_record rec;
    rec.graph_id = std::move(graph_id);
    rec.n = g.order();
    const auto unrestricted = ordering_search(g, ordering_space::all);
    const auto respecting = ordering_search(g, ordering_space::degree_respecting);
    rec.oracle_omega = unrestricted.oracle_omega;
    rec.degree_mode_omega = unrestricted.degree_mode_omega;
    rec.any_exact_unrestricted = unrestricted.any_exact;
    rec.exact_count_unrestricted = unrestricted.exact_count;
    rec.total_unrestricted = unrestricted.orderings_tested;
    rec.any_exact_degree_respecting = respecting.any_exact;
    rec.exact_count_degree_respecting = respecting.exact_count;
    rec.total_degree_respecting = respecting.orderings_tested;
    return rec;
}

struct ordering_sweep_report {
    int order = 0;
    long long graphs = 0;
    std::vector<ordering_record> records;
    long long exact_unrestricted = 0;
    long long exact_degree_respecting = 0;
    long long exact_degree_mode = 0;
    double fraction_unrestricted = 0.0;
    double fraction_degree_respecting = 0.0;
    double fraction_degree_mode = 0.0;
};

// All labeled graphs of the given order, one per edge bitmask. Pair i of the
// lexicographic pair list ((1,2),(1,3),...,(n-1,n)) is present iff bit i of
// the mask is set; the mask doubles as the graph id.
inline graph graph_from_edge_mask(int order, std::uint64_t mask) {
    edge_list edges;
    int bit = 0;
    for (int u = 1; u <= order; ++u)
        for (int v = u + 1; v <= order; ++v) {
            if (mask & (1ULL << bit))
                edges.emplace_back(u, v);
            ++bit;
        }
    return graph(order, edges);
}

inline ordering_sweep_report ordering_sweep_all_graphs(int order) {
    if (order < 1 || order > 5)
        throw std::invalid_argument("ordering sweep: order must be in 1..5");
    const int pairs = order * (order - 1) / 2;
    ordering_sweep_report report;
    report.order = order;
    report.graphs = 1LL << pairs;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
        graph g = graph_from_edge_mask(order, mask);
        ordering_record rec = analyze_graph_orderings(g, std::to_string(mask));
        if (rec.any_exact_unrestricted)
            ++report.exact_unrestricted;
        if (rec.any_exact_degree_respecting)
            ++report.exact_degree_respecting;
        if (rec.degree_mode_omega == rec.oracle_omega)
            ++report.exact_degree_mode;
        report.records.push_back(std::move(rec));
    }
    const double total = static_cast<double>(report.graphs);
    report.fraction_unrestricted = report.exact_unrestricted / total;
    report.fraction_degree_respecting = report.exact_degree_respecting / total;
    report.fraction_degree_mode = report.exact_degree_mode / total;
    return report;
}

inline nlohmann::json ordering_record_json(const ordering_record& rec) {
    return {{"graph_id", rec.graph_id},
            {"n", rec.n},
            {"oracle_omega", rec.oracle_omega},
            {"degree_mode_omega", rec.degree_mode_omega},
            {"any_exact_unrestricted", rec.any_exact_unrestricted},
            {"exact_count_unrestricted", rec.exact_count_unrestricted},
            {"total_unrestricted", rec.total_unrestricted},
            {"any_exact_degree_respecting", rec.any_exact_degree_respecting},
            {"exact_count_degree_respecting", rec.exact_count_degree_respecting},
            {"total_degree_respecting", rec.total_degree_respecting}};
}

inline nlohmann::json ordering_sweep_json(const ordering_sweep_report& report) {
    nlohmann::json j;
    j["schema_version"] = ordering_report_schema_version;
    j["kind"] = "orderings";
    j["params"] = {{"order", report.order}};
    j["records"] = nlohmann::json::array();
    for (const auto& rec : report.records)
        j["records"].push_back(ordering_record_json(rec));
    j["aggregates"] = {{"graphs", report.graphs},
                       {"exact_unrestricted", report.exact_unrestricted},
                       {"exact_degree_respecting", report.exact_degree_respecting},
                       {"exact_degree_mode", report.exact_degree_mode},
                       {"fraction_unrestricted", report.fraction_unrestricted},
                       {"fraction_degree_respecting", report.fraction_degree_respecting},
                       {"fraction_degree_mode", report.fraction_degree_mode}};
    return j;
}

}  // namespace omax
