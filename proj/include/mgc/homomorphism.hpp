#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace mgc {

// A candidate homomorphism: image[v] is the target vertex of source vertex
// v. Only ranges are guaranteed at construction; validity is checked by
// is_homomorphism.
struct VertexMap {
    MixedGraph source;
    MixedGraph target;
    std::vector<int> image;
};

// True iff every adjacency of G maps onto a target adjacency with the same
// code. One comparison per pair covers edges, arcs, colours and
// orientations at once, and a collapsed adjacent pair fails because the
// target diagonal is 0.
inline bool is_homomorphism(const MixedGraph& g, const MixedGraph& h, std::span<const int> image) {
    if (g.spec() != h.spec()) return false;
    if (static_cast<int>(image.size()) != g.order()) return false;
    for (int v : image)
        if (v < 0 || v >= h.order()) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            int code = g.code(u, v);
            if (code != 0 && h.code(image[u], image[v]) != code) return false;
        }
    return true;
}

inline bool is_homomorphism(const VertexMap& f) {
    return is_homomorphism(f.source, f.target, f.image);
}

namespace hom_detail {

// Vertices in descending underlying degree, ties by id: fail-first order,
// deterministic.
inline std::vector<int> degree_order(const MixedGraph& g) {
    std::vector<int> degree(g.order());
    for (int v = 0; v < g.order(); ++v) degree[v] = g.degree(v);
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[a] != degree[b] ? degree[a] > degree[b] : a < b; });
    return order;
}

} // namespace hom_detail

// Complete backtracking search for a homomorphism G -> H. A candidate image
// is kept only if its codes to all already-mapped neighbours match, which is
// the whole constraint, so the search is exact. Deterministic: first
// solution in (degree order, target id) order.
inline std::optional<std::vector<int>> find_homomorphism_image(const MixedGraph& g,
                                                               const MixedGraph& h) {
    if (g.spec() != h.spec())
        throw std::domain_error("homomorphism search requires matching colour specs");
    const int p = g.order();
    if (p == 0) return std::vector<int>{};
    if (h.order() == 0) return std::nullopt;

    const auto order = hom_detail::degree_order(g);
    std::vector<int> position(p);
    for (int i = 0; i < p; ++i) position[order[i]] = i;

    // For each position, the earlier-placed neighbours and the code each
    // pairing must reproduce (seen from the later vertex).
    struct Constraint {
        int vertex;
        int code;
    };
    std::vector<std::vector<Constraint>> constraints(p);
    for (int i = 0; i < p; ++i) {
        int v = order[i];
        for (int u : g.neighbours(v))
            if (position[u] < i) constraints[i].push_back({u, g.code(v, u)});
    }

    std::vector<int> image(p, -1);
    const int target_order = h.order();

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == p) return true;
        const int v = order[depth];
        for (int candidate = 0; candidate < target_order; ++candidate) {
            bool ok = true;
            for (const auto& c : constraints[depth])
                if (h.code(candidate, image[c.vertex]) != c.code) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[v] = candidate;
            if (self(self, depth + 1)) return true;
            image[v] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return image;
}

inline std::optional<VertexMap> find_homomorphism(const MixedGraph& g, const MixedGraph& h) {
    auto image = find_homomorphism_image(g, h);
    if (!image) return std::nullopt;
    return VertexMap{g, h, std::move(*image)};
}

} // namespace mgc
