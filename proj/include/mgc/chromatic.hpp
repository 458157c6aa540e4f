#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "homomorphism.hpp"

namespace mgc {

// A vertex partition: block_of[v] in 0..blocks-1, every block nonempty,
// ids contiguous. The fibres of a colouring.
struct Partition {
    std::vector<int> block_of;
    int blocks = 0;
};

inline void require_valid(const Partition& part, int order) {
    if (static_cast<int>(part.block_of.size()) != order)
        throw std::domain_error("partition size does not match graph order");
    std::vector<bool> seen(part.blocks, false);
    for (int b : part.block_of) {
        if (b < 0 || b >= part.blocks) throw std::domain_error("block id out of range");
        seen[b] = true;
    }
    for (bool s : seen)
        if (!s) throw std::domain_error("partition has an empty block");
}

// Fibres of a vertex map, block ids assigned by first occurrence.
inline Partition fibres(const VertexMap& f) {
    Partition part;
    part.block_of.assign(f.image.size(), -1);
    std::vector<int> block_of_target(f.target.order(), -1);
    for (std::size_t v = 0; v < f.image.size(); ++v) {
        int t = f.image[v];
        if (block_of_target[t] == -1) block_of_target[t] = part.blocks++;
        part.block_of[v] = block_of_target[t];
    }
    return part;
}

struct QuotientConflict {
    int u = -1; // witness pair of source vertices
    int v = -1;
    bool same_block = false; // adjacent inside one block vs. code mismatch across
};

// Contracts each block to one vertex. Valid only when blocks are
// independent sets and all adjacencies between two blocks carry one common
// code; otherwise reports a witness pair.
inline std::optional<MixedGraph> quotient(const MixedGraph& g, const Partition& part,
                                          QuotientConflict* conflict = nullptr) {
    require_valid(part, g.order());
    MixedGraph q(g.spec(), part.blocks);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            int code = g.code(u, v);
            if (code == 0) continue;
            int a = part.block_of[u], b = part.block_of[v];
            if (a == b) {
                if (conflict) *conflict = {u, v, true};
                return std::nullopt;
            }
            int existing = q.code(a, b);
            if (existing == 0)
                q.add_adjacency(a, b, code);
            else if (existing != code) {
                if (conflict) *conflict = {u, v, false};
                return std::nullopt;
            }
        }
    return q;
}

struct ChromaticResult {
    int chi = 0;
    MixedGraph witness_target; // the conflict-free quotient on chi vertices
    VertexMap witness_map;     // block map of the source into it
};

namespace chromatic_detail {

// Backtracking over block assignments in fail-first vertex order. Symmetry
// broken by letting a vertex open at most one new block. The running
// quotient code matrix is maintained incrementally and undone on backtrack.
class PartitionSearch {
public:
    PartitionSearch(const MixedGraph& g, int max_blocks)
        : g_(g), order_(hom_detail::degree_order(g)), k_(max_blocks),
          block_of_(g.order(), -1), qcode_(static_cast<std::size_t>(k_) * k_, 0) {
        const int p = g.order();
        std::vector<int> position(p);
        for (int i = 0; i < p; ++i) position[order_[i]] = i;
        earlier_.resize(p);
        for (int i = 0; i < p; ++i)
            for (int u : g.neighbours(order_[i]))
                if (position[u] < i) earlier_[i].push_back(u);
    }

    std::optional<Partition> run() {
        if (!dfs(0)) return std::nullopt;
        return Partition{block_of_, used_};
    }

private:
    bool dfs(int depth) {
        if (depth == g_.order()) return true;
        const int v = order_[depth];
        const int limit = std::min(used_, k_ - 1);
        for (int b = 0; b <= limit; ++b) {
            int set_count = 0;
            if (try_block(depth, v, b, set_count)) {
                const bool opened = (b == used_);
                if (opened) ++used_;
                block_of_[v] = b;
                if (dfs(depth + 1)) return true;
                block_of_[v] = -1;
                if (opened) --used_;
            }
            undo(set_count);
        }
        return false;
    }

    // Codes in qcode_ are 0 = unset; entries set while placing v are pushed
    // on the trail so a failed or exhausted branch can be unwound.
    bool try_block(int depth, int v, int b, int& set_count) {
        for (int u : earlier_[depth]) {
            const int ub = block_of_[u];
            if (ub == b) return false;
            const int need = g_.code(u, v); // block ub -> block b as seen from ub
            int& entry = qcode_[static_cast<std::size_t>(ub) * k_ + b];
            if (entry == 0) {
                entry = need;
                qcode_[static_cast<std::size_t>(b) * k_ + ub] = dual(need, g_.spec());
                trail_.push_back(static_cast<std::size_t>(ub) * k_ + b);
                ++set_count;
            } else if (entry != need) {
                return false;
            }
        }
        return true;
    }

    void undo(int set_count) {
        while (set_count-- > 0) {
            std::size_t idx = trail_.back();
            trail_.pop_back();
            std::size_t a = idx / k_, b = idx % k_;
            qcode_[idx] = 0;
            qcode_[b * k_ + a] = 0;
        }
    }

    const MixedGraph& g_;
    std::vector<int> order_;
    int k_;
    std::vector<int> block_of_;
    std::vector<int> qcode_;
    std::vector<std::vector<int>> earlier_;
    std::vector<std::size_t> trail_;
    int used_ = 0;
};

} // namespace chromatic_detail

// Exact mixed chromatic number: the least k admitting a conflict-free
// partition into k blocks, searched with increasing k so the first hit is
// minimal and the failed k-1 search certifies optimality. The returned
// witness is re-validated before it leaves.
inline ChromaticResult chromatic_number(const MixedGraph& g) {
    if (g.order() == 0)
        return {0, MixedGraph(g.spec(), 0), VertexMap{g, MixedGraph(g.spec(), 0), {}}};
    for (int k = 1; k <= g.order(); ++k) {
        chromatic_detail::PartitionSearch search(g, k);
        auto part = search.run();
        if (!part) continue;
        auto target = quotient(g, *part);
        if (!target) throw std::logic_error("partition search produced a conflicting partition");
        VertexMap witness{g, *target, part->block_of};
        if (!is_homomorphism(witness))
            throw std::logic_error("partition search produced an invalid block map");
        return {part->blocks, std::move(*target), std::move(witness)};
    }
    throw std::logic_error("no colouring found up to the graph order"); // unreachable
}

// Independent brute-force oracle: the least k <= kmax such that some target
// on k vertices (every code matrix over the pairs, 0 = non-adjacent) admits
// a homomorphism from G. Exponential in k*(k-1)/2; intended for small
// cross-validation instances.
inline std::optional<int> chromatic_number_oracle(const MixedGraph& g, int kmax) {
    if (g.order() == 0) return 0;
    const int c = g.spec().alphabet_size();
    for (int k = 1; k <= kmax; ++k) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
        std::vector<int> assign(pairs.size(), 0); // digit 0 = non-adjacent, 1..c = code
        for (;;) {
            MixedGraph h(g.spec(), k);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (assign[i] != 0) h.add_adjacency(pairs[i].first, pairs[i].second, assign[i]);
            if (find_homomorphism_image(g, h)) return k;
            std::size_t i = 0;
            while (i < assign.size() && assign[i] == c) assign[i++] = 0;
            if (i == assign.size()) break;
            ++assign[i];
        }
    }
    return std::nullopt;
}

} // namespace mgc
