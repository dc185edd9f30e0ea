#pragma once

#include <cstdint>

#include "omax/graph.hpp"

namespace omax {

// splitmix64. Chosen for portable, implementation-independent semantics so
// every seeded instance is reproducible bit-for-bit across platforms.
struct splitmix64 {
    std::uint64_t state;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53-bit resolution
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound); modulo bias is irrelevant at the bounds used here
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

inline std::uint64_t mix64(std::uint64_t x) { return splitmix64(x).next(); }

// Deterministic per-task seed: campaigns derive one seed per (cell, index) so
// serial and parallel execution generate identical instances.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t index) {
    return mix64(base + mix64(cell + mix64(index)));
}

// G(n, p): each unordered pair {u,v}, visited in lexicographic order, is kept
// iff the next unit draw is < p. Identical (n, p, seed) gives the identical
// graph on every platform.
inline graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("graph order must be at least 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must be in [0,1]");
    splitmix64 rng(seed);
    edge_list edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_unit() < p)
                edges.emplace_back(u, v);
    return graph(n, edges);
}

}  // namespace omax
