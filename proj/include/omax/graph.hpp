#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace omax {

// Vertices are 1-based integers, matching the DIMACS convention.
// A vertex_set is kept ascending and duplicate-free.
using vertex_set = std::vector<int>;
using edge_list = std::vector<std::pair<int, int>>;

// Undirected simple loop-free graph. Immutable once constructed; stores both
// a dense adjacency matrix (constant-time adjacency tests) and ascending
// neighbor lists.
class graph {
public:
    graph(int n, const edge_list& edges) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("graph order must be at least 1");
        adj_.assign(static_cast<std::size_t>(n) * n, 0);
        neighbors_.resize(n);
        for (const auto& [u, v] : edges) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("edge endpoint out of range: {" +
                                            std::to_string(u) + "," + std::to_string(v) + "}");
            if (u == v)
                throw std::invalid_argument("self-loop not allowed: vertex " + std::to_string(u));
            at(u, v) = 1;
            at(v, u) = 1;
        }
        m_ = 0;
        for (int v = 1; v <= n; ++v) {
            auto& list = neighbors_[v - 1];
            for (int u = 1; u <= n; ++u)
                if (adjacent(v, u))
                    list.push_back(u);
            m_ += static_cast<int>(list.size());
        }
        m_ /= 2;
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
    }

    int degree(int v) const { return static_cast<int>(neighbors_[v - 1].size()); }
    const std::vector<int>& neighbors(int v) const { return neighbors_[v - 1]; }

    // Edges with smaller endpoint first, sorted lexicographically.
    edge_list edges() const {
        edge_list out;
        out.reserve(m_);
        for (int u = 1; u <= n_; ++u)
            for (int v : neighbors_[u - 1])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    bool operator==(const graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    std::uint8_t& at(int u, int v) {
        return adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<int>> neighbors_;
};

inline graph graph_from_edges(int n, const edge_list& edges) { return graph(n, edges); }

inline graph complete_graph(int n) {
    edge_list edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return graph(n, edges);
}

inline graph null_graph(int n) { return graph(n, {}); }

// Sorts and deduplicates into a valid vertex_set.
inline vertex_set make_vertex_set(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

inline void validate_vertex_set(const graph& g, const vertex_set& s) {
    if (s.empty())
        throw std::invalid_argument("vertex set must be nonempty");
    int prev = 0;
    for (int v : s) {
        if (v < 1 || v > g.order())
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        if (v <= prev)
            throw std::invalid_argument("vertex set must be ascending and duplicate-free");
        prev = v;
    }
}

// True iff all distinct pairs of s are adjacent. Singletons are cliques.
inline bool is_clique(const graph& g, const vertex_set& s) {
    validate_vertex_set(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j]))
                return false;
    return true;
}

// A clique is maximal iff every outside vertex is non-adjacent to some member.
inline bool is_maximal_clique(const graph& g, const vertex_set& s) {
    if (!is_clique(g, s))
        throw std::invalid_argument("is_maximal_clique: input is not a clique");
    for (int x = 1; x <= g.order(); ++x) {
        if (std::binary_search(s.begin(), s.end(), x))
            continue;
        bool misses_one = false;
        for (int y : s)
            if (!g.adjacent(x, y)) {
                misses_one = true;
                break;
            }
        if (!misses_one)
            return false;
    }
    return true;
}

struct induced_graph {
    graph g;
    std::vector<int> labels;  // labels[i] = original id of new vertex i+1
};

// Subgraph on s, vertices relabeled 1..|s| in ascending order of original id.
inline induced_graph induced_subgraph(const graph& g, const vertex_set& s) {
    validate_vertex_set(g, s);
    std::vector<int> new_id(g.order() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        new_id[s[i]] = static_cast<int>(i) + 1;
    edge_list edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                edges.emplace_back(new_id[s[i]], new_id[s[j]]);
    return induced_graph{graph(static_cast<int>(s.size()), edges), s};
}

inline graph complement(const graph& g) {
    edge_list edges;
    for (int u = 1; u <= g.order(); ++u)
        for (int v = u + 1; v <= g.order(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return graph(g.order(), edges);
}

}  // namespace omax
