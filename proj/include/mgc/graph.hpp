#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "colour_spec.hpp"

namespace mgc {

// Adjacency codes from one vertex to an ordered list of vertices, each in
// 1..m+2n (an entry records an actual adjacency, never 0).
using CodeTuple = std::vector<int>;

// An (m,n)-coloured mixed graph on vertices 0..order-1. The single code
// matrix is the only adjacency store: code(u,v) is the adjacency seen from
// u, code(v,u) is forced to its dual, and the diagonal is 0. That makes
// "one edge or one arc per pair, never both" structural.
//
// Values are immutable once a builder returns them and safe to share across
// concurrent readers.
class MixedGraph {
public:
    MixedGraph() = default;

    MixedGraph(ColourSpec spec, int order) : spec_(spec), order_(order) {
        require_valid(spec);
        if (order < 0) throw std::domain_error("graph order must be >= 0");
        if (order > 30000)
            throw std::domain_error("graph on " + std::to_string(order) +
                                    " vertices is too large for a dense code matrix");
        if (spec.alphabet_size() > 255)
            throw std::domain_error("code alphabet larger than 255 is not representable");
        codes_.assign(static_cast<std::size_t>(order) * order, 0);
    }

    const ColourSpec& spec() const { return spec_; }
    int order() const { return order_; }

    int code(int u, int v) const { return codes_[index(u, v)]; }
    bool adjacent(int u, int v) const { return u != v && code(u, v) != 0; }

    // Sets the pair (u,v) to `code` as seen from u; the reverse direction is
    // derived. Rejects loops, duplicate pairs and out-of-range codes.
    void add_adjacency(int u, int v, int code) {
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        check_vertex(u);
        check_vertex(v);
        if (code < 1 || code > spec_.alphabet_size())
            throw std::domain_error("adjacency code " + std::to_string(code) +
                                    " out of range 1.." + std::to_string(spec_.alphabet_size()));
        if (codes_[index(u, v)] != 0)
            throw std::invalid_argument("conflict: pair (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") listed twice");
        codes_[index(u, v)] = static_cast<std::uint8_t>(code);
        codes_[index(v, u)] = static_cast<std::uint8_t>(dual(code, spec_));
    }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (int v = 0; v < order_; ++v)
            if (codes_[index(u, v)] != 0) ++d;
        return d;
    }

    std::vector<int> neighbours(int u) const {
        check_vertex(u);
        std::vector<int> out;
        for (int v = 0; v < order_; ++v)
            if (codes_[index(u, v)] != 0) out.push_back(v);
        return out;
    }

    // Maximum degree of the underlying undirected graph.
    int max_degree() const {
        int best = 0;
        for (int u = 0; u < order_; ++u) best = std::max(best, degree(u));
        return best;
    }

    long long adjacency_count() const {
        long long total = 0;
        for (auto c : codes_)
            if (c != 0) ++total;
        return total / 2;
    }

    bool is_complete_subgraph(std::span<const int> vertices) const {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            check_vertex(vertices[i]);
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (!adjacent(vertices[i], vertices[j])) return false;
        }
        return true;
    }
    bool is_complete_subgraph(const std::vector<int>& vertices) const {
        return is_complete_subgraph(std::span<const int>(vertices));
    }

    bool is_complete() const {
        for (int u = 0; u < order_; ++u)
            for (int v = u + 1; v < order_; ++v)
                if (code(u, v) == 0) return false;
        return true;
    }

    // The tuple of codes from x to an ordered vertex list; x must be
    // adjacent to every listed vertex (so necessarily x is not in it).
    CodeTuple adjacency_vector(int x, std::span<const int> list) const {
        check_vertex(x);
        CodeTuple out;
        out.reserve(list.size());
        for (int v : list) {
            check_vertex(v);
            int c = code(x, v);
            if (v == x || c == 0)
                throw std::invalid_argument("vertex " + std::to_string(x) +
                                            " is not adjacent to " + std::to_string(v));
            out.push_back(c);
        }
        return out;
    }
    CodeTuple adjacency_vector(int x, const std::vector<int>& list) const {
        return adjacency_vector(x, std::span<const int>(list));
    }

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * order_ + v;
    }
    void check_vertex(int u) const {
        if (u < 0 || u >= order_)
            throw std::out_of_range("vertex " + std::to_string(u) + " out of range 0.." +
                                    std::to_string(order_ - 1));
    }

    ColourSpec spec_;
    int order_ = 0;
    std::vector<std::uint8_t> codes_;
};

struct Adjacency {
    int u = 0;
    int v = 0;
    int code = 0;
};

inline MixedGraph build_graph(ColourSpec spec, int order, const std::vector<Adjacency>& adjacencies) {
    MixedGraph g(spec, order);
    for (const auto& a : adjacencies) g.add_adjacency(a.u, a.v, a.code);
    return g;
}

} // namespace mgc
