#pragma once

#include <algorithm>
#include <string>

#include "omax/engine.hpp"

namespace omax {

// Outcome of checking one run against the properties the engine must satisfy
// unconditionally, plus the measured (not asserted) fraction of greedy
// outputs that happen to be maximal in the whole graph rather than only
// within their seed's member set.
struct verification_outcome {
    bool passed = true;
    std::vector<std::string> failures;
    long long oos_records = 0;
    long long oos_maximal_in_g = 0;
    double g_maximality_fraction = 1.0;

    void fail(std::string what) {
        passed = false;
        failures.push_back(std::move(what));
    }
};

namespace detail {

inline bool pairwise_adjacent(const graph& g, const ordered_set& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (!g.adjacent(seq[i], seq[j]))
                return false;
    return true;
}

// Maximality criterion restricted to the members of the seed sequence:
// every seed vertex outside the output misses at least one output vertex.
inline bool maximal_within_seed(const graph& g, const ordered_set& seed, const ordered_set& output) {
    for (int x : seed) {
        if (std::find(output.begin(), output.end(), x) != output.end())
            continue;
        bool misses_one = false;
        for (int y : output)
            if (!g.adjacent(x, y)) {
                misses_one = true;
                break;
            }
        if (!misses_one)
            return false;
    }
    return true;
}

}  // namespace detail

// Checks a traced run: stored clique soundness (including after every direct
// extension), pairwise adjacency and within-seed maximality of every greedy
// output, monotonicity of the stored clique size, first-element retention,
// and the sub-iteration count bound. Requires a trace.
inline verification_outcome verify_result(const graph& g, const run_result& rr) {
    if (!rr.trace)
        throw std::invalid_argument("verify_result: run_result carries no trace");
    const run_trace& t = *rr.trace;
    verification_outcome out;
    const int n = g.order();

    if (rr.lc_stored.empty())
        out.fail("stored clique is empty");
    else if (!is_clique(g, rr.lc_stored))
        out.fail("stored clique is not a clique");
    if (static_cast<int>(rr.lc_stored.size()) != rr.omega_stored)
        out.fail("stored clique size disagrees with stored omega");

    const long long bound = static_cast<long long>(n) * (n - 1) / 2;
    if (rr.sub_iteration_count > bound)
        out.fail("sub-iteration count exceeds n(n-1)/2");

    long long recorded_subs = 0;
    int prev_omega = 1;
    for (const auto& it : t.iterations) {
        if (it.extended) {
            if (it.lc_after.empty() || !is_clique(g, it.lc_after))
                out.fail("r=" + std::to_string(it.r) + ": stored clique invalid after extension");
            if (static_cast<int>(it.lc_after.size()) != it.omega_stored_after)
                out.fail("r=" + std::to_string(it.r) + ": stored size mismatch after extension");
            if (it.omega_stored_after < prev_omega)
                out.fail("r=" + std::to_string(it.r) + ": stored omega decreased");
            prev_omega = it.omega_stored_after;
            continue;
        }
        for (const auto& sub : it.subs) {
            ++recorded_subs;
            ++out.oos_records;
            if (sub.output.empty() || sub.output.front() != sub.seed.front())
                out.fail("r=" + std::to_string(sub.r) + " j=" + std::to_string(sub.j) +
                         ": output does not start with the seed's first element");
            const bool output_is_clique = detail::pairwise_adjacent(g, sub.output);
            if (!output_is_clique)
                out.fail("r=" + std::to_string(sub.r) + " j=" + std::to_string(sub.j) +
                         ": output is not a clique");
            if (!detail::maximal_within_seed(g, sub.seed, sub.output))
                out.fail("r=" + std::to_string(sub.r) + " j=" + std::to_string(sub.j) +
                         ": output not maximal within its seed");
            if (sub.omega_current != static_cast<int>(sub.output.size()))
                out.fail("r=" + std::to_string(sub.r) + " j=" + std::to_string(sub.j) +
                         ": omega_current disagrees with output size");
            if (sub.omega_stored_after < prev_omega)
                out.fail("r=" + std::to_string(sub.r) + " j=" + std::to_string(sub.j) +
                         ": stored omega decreased");
            prev_omega = sub.omega_stored_after;
            if (output_is_clique && !sub.output.empty() &&
                is_maximal_clique(g, make_vertex_set(sub.output)))
                ++out.oos_maximal_in_g;
        }
    }

    if (t.outcome == outcome_kind::general && recorded_subs != rr.sub_iteration_count)
        out.fail("trace sub-iteration records disagree with sub_iteration_count");
    if (t.final_omega != rr.omega_stored)
        out.fail("trace final omega disagrees with run result");

    out.g_maximality_fraction =
        out.oos_records == 0 ? 1.0
                             : static_cast<double>(out.oos_maximal_in_g) /
                                   static_cast<double>(out.oos_records);
    return out;
}

}  // namespace omax
