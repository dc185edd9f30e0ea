#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "omax/graph.hpp"

namespace omax {

// Duplicate-free indexed vertex sequence; order is significant.
using ordered_set = std::vector<int>;

enum class ordering_mode { degree_descending, explicit_order };

struct engine_config {
    ordering_mode mode = ordering_mode::degree_descending;
    std::optional<ordered_set> order;  // permutation of 1..n; explicit mode only
    bool trace_enabled = false;
};

enum class outcome_kind { complete_shortcut, null_shortcut, general };

// One pass of the greedy inner loop: the seed sequence as rotated for this
// sub-iteration, the ordered output set it produced, and the clique sizes.
struct sub_iteration_record {
    int r = 0;
    int j = 0;
    ordered_set seed;
    ordered_set output;
    int omega_current = 0;
    int omega_stored_after = 0;
};

struct iteration_record {
    int r = 0;
    ordered_set window;
    bool extended = false;     // window's last vertex adjacent to all others
    int extend_vertex = 0;     // set when extended
    vertex_set lc_after;       // stored clique right after an extension
    int omega_stored_after = 0;
    int removal_index = 0;     // m; expansion branch only
    ordered_set seed_initial;  // S before any rotation
    std::vector<sub_iteration_record> subs;
};

struct run_trace {
    ordered_set ver;
    outcome_kind outcome = outcome_kind::general;
    std::vector<iteration_record> iterations;
    int final_omega = 0;
    vertex_set final_clique;
};

struct run_result {
    int omega_stored = 0;
    vertex_set lc_stored;
    outcome_kind outcome = outcome_kind::general;
    long long sub_iteration_count = 0;
    std::vector<int> extended_rs;  // prefix lengths whose iteration extended the stored clique in place
    std::optional<run_trace> trace;
};

// Permutation of 1..n by non-ascending degree, ties broken by ascending id.
inline ordered_set degree_ordering(const graph& g) {
    ordered_set ver(g.order());
    for (int v = 1; v <= g.order(); ++v)
        ver[v - 1] = v;
    std::sort(ver.begin(), ver.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });
    return ver;
}

// [s1,...,sk] -> [s2,...,sk,s1]
inline ordered_set rotate_left(const ordered_set& s) {
    if (s.empty())
        throw std::invalid_argument("rotate_left: empty sequence");
    ordered_set out(s.begin() + 1, s.end());
    out.push_back(s.front());
    return out;
}

// Largest index m <= |w|-1 with w(m) non-adjacent to the last element of w.
// The caller must only get here when such an index exists.
inline int find_removal_index(const graph& g, const ordered_set& w) {
    if (w.size() < 2)
        throw std::invalid_argument("find_removal_index: window too short");
    int last = w.back();
    for (int m = static_cast<int>(w.size()) - 1; m >= 1; --m)
        if (!g.adjacent(w[m - 1], last))
            return m;
    throw std::invalid_argument("find_removal_index: last element adjacent to all others");
}

// Greedy inner loop. Repeatedly takes the front of the candidate sequence as
// lead, appends it to the output, and keeps only the remaining candidates
// adjacent to that lead — every position is scanned, non-adjacent elements
// are skipped, the scan continues. Returns the ordered output set: a clique
// containing seed(1) first, maximal within the subgraph induced by seed's
// member set.
inline ordered_set greedy_expand(const graph& g, const ordered_set& seed) {
    if (seed.empty())
        throw std::invalid_argument("greedy_expand: empty seed");
    ordered_set output;
    ordered_set candidates = seed;
    while (true) {
        int lead = candidates.front();
        output.push_back(lead);
        ordered_set survivors;
        for (std::size_t a = 1; a < candidates.size(); ++a)
            if (g.adjacent(lead, candidates[a]))
                survivors.push_back(candidates[a]);
        if (survivors.empty())
            return output;
        candidates = std::move(survivors);
    }
}

namespace detail {

inline void validate_permutation(const graph& g, const ordered_set& order) {
    if (static_cast<int>(order.size()) != g.order())
        throw std::invalid_argument("ordering must contain every vertex exactly once");
    std::vector<char> seen(g.order() + 1, 0);
    for (int v : order) {
        if (v < 1 || v > g.order() || seen[v])
            throw std::invalid_argument("ordering must be a permutation of 1..n");
        seen[v] = 1;
    }
}

}  // namespace detail

// Full run over prefix windows of the vertex ordering: shortcut outputs for
// complete and null graphs; otherwise, for each r = 2..n, either extend the
// stored clique directly (window's last vertex universal in the window) or
// drop the removal vertex and feed all cyclic rotations of the remainder
// through greedy_expand, keeping the best output under strict improvement.
inline run_result run(const graph& g, const engine_config& cfg = {}) {
    if (cfg.mode == ordering_mode::explicit_order) {
        if (!cfg.order)
            throw std::invalid_argument("explicit ordering mode requires an ordering");
        detail::validate_permutation(g, *cfg.order);
    } else if (cfg.order) {
        throw std::invalid_argument("ordering given but mode is degree_descending");
    }

    const int n = g.order();
    const int e = g.edge_count();
    ordered_set ver = cfg.mode == ordering_mode::explicit_order ? *cfg.order : degree_ordering(g);

    run_result res;
    if (cfg.trace_enabled) {
        res.trace.emplace();
        res.trace->ver = ver;
    }

    auto finish = [&](int omega, vertex_set lc, outcome_kind kind) {
        res.omega_stored = omega;
        res.lc_stored = std::move(lc);
        res.outcome = kind;
        if (res.trace) {
            res.trace->outcome = kind;
            res.trace->final_omega = res.omega_stored;
            res.trace->final_clique = res.lc_stored;
        }
    };

    if (e == n * (n - 1) / 2) {
        vertex_set all(n);
        for (int v = 1; v <= n; ++v)
            all[v - 1] = v;
        finish(n, std::move(all), outcome_kind::complete_shortcut);
        return res;
    }
    if (e == 0) {
        finish(1, {ver.front()}, outcome_kind::null_shortcut);
        return res;
    }

    vertex_set lc = {ver.front()};
    int omega = 1;

    for (int r = 2; r <= n; ++r) {
        ordered_set window(ver.begin(), ver.begin() + r);
        const int z = window.back();

        iteration_record rec;
        if (res.trace) {
            rec.r = r;
            rec.window = window;
        }

        bool universal = true;
        for (int i = 0; i + 1 < r; ++i)
            if (!g.adjacent(window[i], z)) {
                universal = false;
                break;
            }

        if (universal) {
            omega += 1;
            lc.insert(std::lower_bound(lc.begin(), lc.end(), z), z);
            res.extended_rs.push_back(r);
            if (res.trace) {
                rec.extended = true;
                rec.extend_vertex = z;
                rec.lc_after = lc;
                rec.omega_stored_after = omega;
                res.trace->iterations.push_back(std::move(rec));
            }
            continue;
        }

        const int m = find_removal_index(g, window);
        ordered_set seed;
        seed.reserve(r - 1);
        for (int i = 0; i < r; ++i)
            if (i != m - 1)
                seed.push_back(window[i]);
        if (res.trace) {
            rec.removal_index = m;
            rec.seed_initial = seed;
        }

        const int sub_count = static_cast<int>(seed.size());
        for (int j = 1; j <= sub_count; ++j) {
            if (j > 1)
                seed = rotate_left(seed);
            ordered_set output = greedy_expand(g, seed);
            const int omega_current = static_cast<int>(output.size());
            res.sub_iteration_count += 1;
            if (omega_current > omega) {
                omega = omega_current;
                lc = make_vertex_set(output);
            }
            if (res.trace) {
                sub_iteration_record sub;
                sub.r = r;
                sub.j = j;
                sub.seed = seed;
                sub.output = std::move(output);
                sub.omega_current = omega_current;
                sub.omega_stored_after = omega;
                rec.subs.push_back(std::move(sub));
            }
        }
        if (res.trace)
            res.trace->iterations.push_back(std::move(rec));
    }

    finish(omega, std::move(lc), outcome_kind::general);
    return res;
}

inline run_result run_with_ordering(const graph& g, const ordered_set& order, bool trace_enabled = false) {
    engine_config cfg;
    cfg.mode = ordering_mode::explicit_order;
    cfg.order = order;
    cfg.trace_enabled = trace_enabled;
    return run(g, cfg);
}

namespace detail {

inline std::string seq_text(const std::vector<int>& seq) {
    std::string out = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(seq[i]);
    }
    out += "]";
    return out;
}

}  // namespace detail

// One line per event, diff-friendly:
//   Ver=[...]
//   r=<r> W=[...]
//   extend z=<z> omega_stored=<v> lc_stored=[...]   (direct extension)
//   m=<m> / S=[...] / j=<j> OP=[...] omega_current=<v>  (expansion sweep)
//   omega=<v> clique=[...]
inline std::string trace_to_text(const run_trace& t) {
    std::string out = "Ver=" + detail::seq_text(t.ver) + "\n";
    if (t.outcome == outcome_kind::complete_shortcut)
        out += "shortcut=complete\n";
    else if (t.outcome == outcome_kind::null_shortcut)
        out += "shortcut=null\n";
    for (const auto& it : t.iterations) {
        out += "r=" + std::to_string(it.r) + " W=" + detail::seq_text(it.window) + "\n";
        if (it.extended) {
            out += "extend z=" + std::to_string(it.extend_vertex) +
                   " omega_stored=" + std::to_string(it.omega_stored_after) +
                   " lc_stored=" + detail::seq_text(it.lc_after) + "\n";
            continue;
        }
        out += "m=" + std::to_string(it.removal_index) + "\n";
        out += "S=" + detail::seq_text(it.seed_initial) + "\n";
        for (const auto& sub : it.subs)
            out += "j=" + std::to_string(sub.j) + " OP=" + detail::seq_text(sub.output) +
                   " omega_current=" + std::to_string(sub.omega_current) + "\n";
    }
    out += "omega=" + std::to_string(t.final_omega) +
           " clique=" + detail::seq_text(t.final_clique) + "\n";
    return out;
}

}  // namespace omax
