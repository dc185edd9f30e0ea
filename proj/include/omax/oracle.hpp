#pragma once

#include <algorithm>

#include "omax/graph.hpp"

namespace omax {

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct oracle_result {
    int omega = 0;
    vertex_set witness;
    long long nodes_explored = 0;
};

inline constexpr int brute_force_max_order = 24;
inline constexpr int enumerate_max_order = 20;
inline constexpr long long default_bnb_node_budget = 50'000'000;

namespace detail {

struct clique_dfs {
    const graph& g;
    vertex_set current;
    vertex_set best;
    long long nodes = 0;

    explicit clique_dfs(const graph& gr) : g(gr) {}

    // Visits every clique exactly once, in lexicographic order of the
    // ascending vertex sequence, so the first clique found at each new size
    // is the lexicographically smallest of that size.
    void extend(const std::vector<int>& candidates) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const int v = candidates[i];
            ++nodes;
            current.push_back(v);
            if (current.size() > best.size())
                best = current;
            std::vector<int> next;
            for (std::size_t k = i + 1; k < candidates.size(); ++k)
                if (g.adjacent(v, candidates[k]))
                    next.push_back(candidates[k]);
            if (!next.empty())
                extend(next);
            current.pop_back();
        }
    }
};

}  // namespace detail

// Exhaustive ground truth: complete recursive enumeration of all cliques.
// Witness is the lexicographically smallest maximum clique.
inline oracle_result brute_force_omega(const graph& g) {
    if (g.order() > brute_force_max_order)
        throw std::invalid_argument("brute_force_omega: order " + std::to_string(g.order()) +
                                    " exceeds guard of " + std::to_string(brute_force_max_order));
    detail::clique_dfs dfs(g);
    std::vector<int> all(g.order());
    for (int v = 1; v <= g.order(); ++v)
        all[v - 1] = v;
    dfs.extend(all);
    return oracle_result{static_cast<int>(dfs.best.size()), std::move(dfs.best), dfs.nodes};
}

namespace detail {

struct bnb_state {
    const graph& g;
    long long budget;
    long long nodes = 0;
    vertex_set current;
    vertex_set best;

    bnb_state(const graph& gr, long long node_budget) : g(gr), budget(node_budget) {}

    void search(const std::vector<int>& candidates) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            // size bound: even taking every remaining candidate cannot beat
            // the incumbent
            if (current.size() + (candidates.size() - i) <= best.size())
                return;
            if (++nodes > budget)
                throw budget_exceeded("branch_and_bound_omega: node budget of " +
                                      std::to_string(budget) + " exceeded");
            const int v = candidates[i];
            current.push_back(v);
            if (current.size() > best.size())
                best = current;
            std::vector<int> next;
            for (std::size_t k = i + 1; k < candidates.size(); ++k)
                if (g.adjacent(v, candidates[k]))
                    next.push_back(candidates[k]);
            if (!next.empty())
                search(next);
            current.pop_back();
        }
    }
};

}  // namespace detail

// Exact solver with incumbent pruning; practical to a few hundred vertices.
// Aborts with budget_exceeded rather than ever returning an inexact answer.
inline oracle_result branch_and_bound_omega(const graph& g,
                                            long long node_budget = default_bnb_node_budget) {
    detail::bnb_state state(g, node_budget);
    std::vector<int> all(g.order());
    for (int v = 1; v <= g.order(); ++v)
        all[v - 1] = v;
    state.search(all);
    return oracle_result{static_cast<int>(state.best.size()), std::move(state.best), state.nodes};
}

namespace detail {

inline void bron_kerbosch(const graph& g, std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x, std::vector<vertex_set>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(make_vertex_set(r));
        return;
    }
    // pivot with the most neighbors in p; smallest id wins ties
    int pivot = 0, pivot_cover = -1;
    for (const auto& side : {p, x})
        for (int u : side) {
            int cover = 0;
            for (int w : p)
                if (g.adjacent(u, w))
                    ++cover;
            if (cover > pivot_cover) {
                pivot_cover = cover;
                pivot = u;
            }
        }
    std::vector<int> branch;
    for (int v : p)
        if (!g.adjacent(pivot, v))
            branch.push_back(v);
    for (int v : branch) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (g.adjacent(v, w))
                p2.push_back(w);
        for (int w : x)
            if (g.adjacent(v, w))
                x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace detail

// All maximal cliques, each ascending, list sorted lexicographically.
inline std::vector<vertex_set> enumerate_maximal_cliques(const graph& g) {
    if (g.order() > enumerate_max_order)
        throw std::invalid_argument("enumerate_maximal_cliques: order " + std::to_string(g.order()) +
                                    " exceeds guard of " + std::to_string(enumerate_max_order));
    std::vector<int> all(g.order()), r;
    for (int v = 1; v <= g.order(); ++v)
        all[v - 1] = v;
    std::vector<vertex_set> out;
    detail::bron_kerbosch(g, r, all, {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace omax
