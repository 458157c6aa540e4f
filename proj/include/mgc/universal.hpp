#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorization.hpp"
#include "homomorphism.hpp"
#include "text_io.hpp"

namespace mgc {

// --- the bipartite template H -----------------------------------------------
//
// K_{c,c} with c = m+2n, sides A = vertices 0..c-1 and B = c..2c-1, its c
// factors recoloured so factor i carries exactly the adjacencies of code i
// as seen from the A-side: factors 1..m become edges of that colour,
// factors m+1..m+n arcs A->B, factors m+n+1..m+2n arcs B->A. Every vertex
// ends up incident with every code exactly once in each direction, which is
// what the lifted target below depends on.
inline MixedGraph build_H(ColourSpec spec, const OneFactorization& factorization) {
    require_valid(spec);
    validate(factorization);
    const int c = spec.alphabet_size();
    if (factorization.size != c)
        throw std::domain_error("factorization size " + std::to_string(factorization.size) +
                                " does not match code alphabet " + std::to_string(c));
    MixedGraph h(spec, 2 * c);
    for (int factor = 1; factor <= c; ++factor)
        for (int j = 0; j < c; ++j) {
            const int a = j;
            const int b = c + factorization.perms[factor - 1][j];
            h.add_adjacency(a, b, factor); // code from the A-side == factor index
        }
    // Construction check: each vertex sees every code exactly once.
    for (int v = 0; v < 2 * c; ++v) {
        std::vector<bool> seen(c + 1, false);
        for (int u : h.neighbours(v)) {
            int code = h.code(v, u);
            if (seen[code]) throw std::logic_error("template vertex repeats a code");
            seen[code] = true;
        }
        for (int code = 1; code <= c; ++code)
            if (!seen[code]) throw std::logic_error("template vertex misses a code");
    }
    return h;
}

// --- the complete multipartite target Z --------------------------------------
//
// Vertices are (index i in 1..q; one coordinate in 1..c for every other
// position, a hole at position i). Two vertices with indices i < j are
// joined by the code their coordinate pair selects in the template H, and
// same-index vertices are non-adjacent, so the underlying graph is complete
// q-partite with parts of size c^(q-1).

struct ZVertex {
    int index = 1;           // 1..q
    std::vector<int> coords; // length q; coords[index-1] == 0 (the hole), others in 1..c
};

// Fixed enumeration of the q * c^(q-1) vertices: index-major, then the
// non-hole coordinates as a base-c number (earlier positions most
// significant). Keeps Z vertex ids reproducible across runs.
class ZSpace {
public:
    ZSpace(ColourSpec spec, int q) : spec_(spec), q_(q) {
        require_valid(spec);
        if (q < 1) throw std::domain_error("index count q must be >= 1");
        per_part_ = 1;
        for (int i = 1; i < q; ++i) {
            per_part_ *= spec.alphabet_size();
            if (per_part_ > (1LL << 40))
                throw std::domain_error("target family too large to enumerate");
        }
    }

    ColourSpec spec() const { return spec_; }
    int q() const { return q_; }
    long long part_size() const { return per_part_; }
    long long vertex_count() const { return per_part_ * q_; }

    int index_of(long long id) const { return static_cast<int>(id / per_part_) + 1; }

    ZVertex vertex(long long id) const {
        if (id < 0 || id >= vertex_count()) throw std::out_of_range("Z vertex id out of range");
        ZVertex v;
        v.index = index_of(id);
        v.coords.assign(q_, 0);
        long long rest = id % per_part_;
        const int c = spec_.alphabet_size();
        for (int pos = q_ - 1; pos >= 0; --pos) {
            if (pos + 1 == v.index) continue; // the hole
            v.coords[pos] = 1 + static_cast<int>(rest % c);
            rest /= c;
        }
        return v;
    }

    long long id(const ZVertex& v) const {
        if (v.index < 1 || v.index > q_) throw std::out_of_range("Z vertex index out of range");
        const int c = spec_.alphabet_size();
        long long rest = 0;
        for (int pos = 0; pos < q_; ++pos) {
            if (pos + 1 == v.index) {
                if (v.coords[pos] != 0) throw std::domain_error("Z vertex hole must be 0");
                continue;
            }
            if (v.coords[pos] < 1 || v.coords[pos] > c)
                throw std::domain_error("Z vertex coordinate out of range");
            rest = rest * c + (v.coords[pos] - 1);
        }
        return (v.index - 1) * per_part_ + rest;
    }

private:
    ColourSpec spec_;
    int q_;
    long long per_part_ = 1;
};

inline MixedGraph build_Z(ColourSpec spec, int q, const MixedGraph& h) {
    require_valid(spec);
    const int c = spec.alphabet_size();
    if (h.spec() != spec || h.order() != 2 * c)
        throw std::domain_error("template graph does not match the colour spec");
    ZSpace space(spec, q);
    const long long count = space.vertex_count();
    if (count > 8192)
        throw std::domain_error("target on " + std::to_string(count) +
                                " vertices is too large to materialize");
    MixedGraph z(spec, static_cast<int>(count));

    std::vector<ZVertex> verts;
    verts.reserve(count);
    for (long long id = 0; id < count; ++id) verts.push_back(space.vertex(id));

    for (long long vi = 0; vi < count; ++vi)
        for (long long wi = vi + 1; wi < count; ++wi) {
            const ZVertex& v = verts[vi];
            const ZVertex& w = verts[wi];
            if (v.index == w.index) continue; // same part: non-adjacent
            // v has the lower index because ids are index-major.
            const int s = v.coords[w.index - 1];
            const int t = w.coords[v.index - 1];
            const int code = h.code(s - 1, c + (t - 1)); // seen from the A-side == from v
            z.add_adjacency(static_cast<int>(vi), static_cast<int>(wi), code);
        }
    return z;
}

// --- constructive colouring into Z -------------------------------------------

// Raised when the complete fallback search cannot embed a graph that the
// target family is guaranteed to host; carries the instance.
struct UniversalityError : std::logic_error {
    explicit UniversalityError(const std::string& message) : std::logic_error(message) {}
};

namespace universal_detail {

// Least Z vertex consistent with all mapped neighbours of `vertex`, with
// its part index outside `forbidden` (pass empty for no constraint).
inline long long least_consistent(const MixedGraph& g, const MixedGraph& z, const ZSpace& space,
                                  const std::vector<int>& image, int vertex,
                                  const std::vector<bool>& forbidden_index) {
    const auto nbrs = g.neighbours(vertex);
    for (long long candidate = 0; candidate < z.order(); ++candidate) {
        if (!forbidden_index.empty() && forbidden_index[space.index_of(candidate)]) continue;
        bool ok = true;
        for (int u : nbrs) {
            if (image[u] < 0) continue;
            if (z.code(static_cast<int>(candidate), image[u]) != g.code(vertex, u)) {
                ok = false;
                break;
            }
        }
        if (ok) return candidate;
    }
    return -1;
}

struct RepairContext {
    const MixedGraph& g;
    const MixedGraph& z;
    const ZSpace& space;
    std::vector<int>& image;
};

inline bool distinct_neighbourhood(RepairContext& ctx, int center, int depth);

// Re-place `vertex` on the least consistent candidate whose part avoids
// `forbidden`. A fresh part always exists once the placed neighbours of
// `vertex` sit in pairwise distinct parts, so on failure those are repaired
// first (bounded recursion) and the placement retried.
inline bool replace_with_fresh_index(RepairContext& ctx, int vertex,
                                     const std::vector<bool>& forbidden, int depth) {
    long long fresh = least_consistent(ctx.g, ctx.z, ctx.space, ctx.image, vertex, forbidden);
    if (fresh < 0 && depth > 0 && distinct_neighbourhood(ctx, vertex, depth - 1))
        fresh = least_consistent(ctx.g, ctx.z, ctx.space, ctx.image, vertex, forbidden);
    if (fresh < 0) return false;
    ctx.image[vertex] = static_cast<int>(fresh);
    return true;
}

// Forces the placed neighbours of `center` into pairwise distinct parts,
// moving the later-id vertex of each colliding pair. A move can introduce a
// new collision, so the pass loops until stable (or gives up).
inline bool distinct_neighbourhood(RepairContext& ctx, int center, int depth) {
    std::vector<int> placed;
    for (int u : ctx.g.neighbours(center))
        if (ctx.image[u] >= 0) placed.push_back(u);
    const int q = ctx.space.q();
    for (std::size_t pass = 0; pass <= placed.size(); ++pass) {
        bool collision = false;
        for (std::size_t i = 0; i < placed.size() && !collision; ++i)
            for (std::size_t j = 0; j < i && !collision; ++j) {
                if (ctx.space.index_of(ctx.image[placed[i]]) !=
                    ctx.space.index_of(ctx.image[placed[j]]))
                    continue;
                collision = true;
                std::vector<bool> forbidden(q + 1, false);
                for (std::size_t r = 0; r < placed.size(); ++r)
                    if (r != i) forbidden[ctx.space.index_of(ctx.image[placed[r]])] = true;
                if (!replace_with_fresh_index(ctx, placed[i], forbidden, depth)) return false;
            }
        if (!collision) return true;
    }
    return false;
}

// Complete backtracking G -> Z in a BFS order from high-degree roots, so
// every vertex after a root is constrained by a placed neighbour. Only used
// when the repair scheme gives up, which the construction makes rare.
inline std::optional<std::vector<int>> bfs_backtracking(const MixedGraph& g,
                                                        const MixedGraph& z) {
    const int p = g.order();
    std::vector<int> order;
    order.reserve(p);
    std::vector<bool> visited(p, false);
    for (;;) {
        int root = -1;
        for (int v = 0; v < p; ++v)
            if (!visited[v] && (root < 0 || g.degree(v) > g.degree(root))) root = v;
        if (root < 0) break;
        std::size_t frontier = order.size();
        visited[root] = true;
        order.push_back(root);
        while (frontier < order.size()) {
            for (int u : g.neighbours(order[frontier]))
                if (!visited[u]) {
                    visited[u] = true;
                    order.push_back(u);
                }
            ++frontier;
        }
    }

    std::vector<std::vector<std::pair<int, int>>> constraints(p); // (earlier vertex, code)
    {
        std::vector<int> position(p);
        for (int i = 0; i < p; ++i) position[order[i]] = i;
        for (int i = 0; i < p; ++i)
            for (int u : g.neighbours(order[i]))
                if (position[u] < i) constraints[i].emplace_back(u, g.code(order[i], u));
    }

    std::vector<int> image(p, -1);
    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == p) return true;
        const int v = order[depth];
        for (int candidate = 0; candidate < z.order(); ++candidate) {
            bool ok = true;
            for (const auto& [u, code] : constraints[depth])
                if (z.code(candidate, image[u]) != code) {
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

} // namespace universal_detail

// Homomorphism G -> Z for any G with maximum degree <= k into the q = 2k-1
// family member Z. Vertices are inserted in id order; before extending to
// x, the images of x's already-placed neighbours are repaired (in ascending
// id, each re-placed on the least consistent vertex of a fresh part) so
// they sit in pairwise distinct parts, after which an extension ensured by
// the target's adjacency-richness always exists. If the repair scheme ever
// fails, a complete backtracking search takes over; that search failing too
// would contradict the construction and raises UniversalityError.
inline VertexMap universal_colouring(const MixedGraph& g, const MixedGraph& z, int q, int k) {
    if (k < 1) throw std::domain_error("degree bound k must be >= 1");
    if (q != 2 * k - 1) throw std::domain_error("target family needs q = 2k - 1");
    if (g.max_degree() > k)
        throw std::domain_error("graph maximum degree exceeds the bound k");
    ZSpace space(g.spec(), q);
    if (z.order() != space.vertex_count() || z.spec() != g.spec())
        throw std::domain_error("target does not match the expected family member");

    const int p = g.order();
    std::vector<int> image(p, -1);
    universal_detail::RepairContext ctx{g, z, space, image};
    bool repaired_ok = true;

    for (int x = 0; x < p && repaired_ok; ++x) {
        // Repair pass: force pairwise distinct part indices among the
        // placed neighbours of x, never disturbing code-validity, then
        // extend to x (its neighbours now span distinct parts, so a
        // consistent image exists by the target's adjacency-richness).
        repaired_ok = universal_detail::distinct_neighbourhood(ctx, x, 3);
        if (!repaired_ok) break;
        long long chosen = universal_detail::least_consistent(g, z, space, image, x, {});
        if (chosen < 0) {
            repaired_ok = false;
            break;
        }
        image[x] = static_cast<int>(chosen);
    }

    if (!repaired_ok) {
        // Complete search over Z; guaranteed to succeed for this family.
        auto fallback = universal_detail::bfs_backtracking(g, z);
        if (!fallback)
            throw UniversalityError("no homomorphism into the guaranteed target; instance:\n" +
                                    serialize_graph(g));
        image = std::move(*fallback);
    }

    VertexMap result{g, z, std::move(image)};
    if (!is_homomorphism(result))
        throw std::logic_error("universal colouring produced an invalid map");
    return result;
}

} // namespace mgc
