#pragma once

#include <cstdint>

#include "graph.hpp"
#include "rng.hpp"

namespace mgc {

// Random graph with underlying maximum degree <= max_degree: pairs are
// visited in a fixed order, skipped outright when either endpoint is
// saturated, and otherwise realized with the given probability and a
// uniform code. Deterministic per seed; not uniform over such graphs.
inline MixedGraph random_bounded_degree(ColourSpec spec, int order, int max_degree,
                                        double edge_probability, std::uint64_t seed) {
    require_valid(spec);
    if (order < 0) throw std::domain_error("order must be >= 0");
    if (max_degree < 0) throw std::domain_error("max degree must be >= 0");
    MixedGraph g(spec, order);
    Rng rng(seed);
    std::vector<int> degree(order, 0);
    const int c = spec.alphabet_size();
    for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v) {
            if (degree[u] >= max_degree || degree[v] >= max_degree) continue;
            if (!rng.coin(edge_probability)) continue;
            g.add_adjacency(u, v, 1 + static_cast<int>(rng.below(c)));
            ++degree[u];
            ++degree[v];
        }
    }
    return g;
}

// Complete mixed graph on t vertices; each unordered pair gets one of the c
// codes (as seen from its lower-indexed endpoint) uniformly and
// independently. Deterministic per seed.
inline MixedGraph random_complete(ColourSpec spec, int order, std::uint64_t seed) {
    require_valid(spec);
    if (order < 1) throw std::domain_error("complete graph needs at least one vertex");
    MixedGraph g(spec, order);
    Rng rng(seed);
    const int c = spec.alphabet_size();
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            g.add_adjacency(u, v, 1 + static_cast<int>(rng.below(c)));
    return g;
}

} // namespace mgc
