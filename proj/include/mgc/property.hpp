#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace mgc {

// Verdict for the adjacency-richness property P_{a,b}: every complete
// subgraph X with |X| <= a, together with every code tuple over it, must be
// extended by at least b vertices.

struct PropertyCounterexample {
    std::vector<int> clique; // the complete subgraph X, ascending
    CodeTuple tuple;         // the required codes L
    long long found = 0;     // how many extenders exist (< b)
};

enum class CheckKind { exhaustive, sampled };

struct PropertyReport {
    int a = 0;
    int b = 1;
    bool holds = false; // in sampled mode: "no violation found", never a certificate
    CheckKind kind = CheckKind::exhaustive;
    std::uint64_t trials = 0; // sampled mode only
    std::uint64_t seed = 0;   // sampled mode only
    std::optional<PropertyCounterexample> counterexample;
};

struct Exhaustive {
    int jobs = 1;
};
struct Sampled {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
};
using PropertyMode = std::variant<Exhaustive, Sampled>;

namespace property_detail {

// All complete subgraphs of size <= max_size, as ascending vertex lists in
// DFS prefix order (the empty set first). Prefix order is the enumeration
// order counterexamples are reported in.
inline std::vector<std::vector<int>> enumerate_cliques(const MixedGraph& g, int max_size) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto extend = [&](auto&& self, int from) -> void {
        out.push_back(current);
        if (static_cast<int>(current.size()) == max_size) return;
        for (int v = from; v < g.order(); ++v) {
            bool joined = true;
            for (int u : current)
                if (!g.adjacent(u, v)) {
                    joined = false;
                    break;
                }
            if (!joined) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

// Tuples are indexed little-endian: position r contributes (code-1) * c^r.
inline CodeTuple decode_tuple(long long idx, int length, int c) {
    CodeTuple tuple(length);
    for (int r = 0; r < length; ++r) {
        tuple[r] = 1 + static_cast<int>(idx % c);
        idx /= c;
    }
    return tuple;
}

// Least deficient tuple index for one clique, or -1 if every tuple has at
// least b extenders. counts is scratch of size c^|X|.
inline long long first_deficit(const MixedGraph& g, const std::vector<int>& clique, int b,
                               std::vector<long long>& counts) {
    const int c = g.spec().alphabet_size();
    long long table = 1;
    for (std::size_t i = 0; i < clique.size(); ++i) table *= c;
    counts.assign(table, 0);
    for (int x = 0; x < g.order(); ++x) {
        long long idx = 0, weight = 1;
        bool adjacent_to_all = true;
        for (int u : clique) {
            int code = g.code(x, u);
            if (x == u || code == 0) {
                adjacent_to_all = false;
                break;
            }
            idx += static_cast<long long>(code - 1) * weight;
            weight *= c;
        }
        if (adjacent_to_all) ++counts[idx];
    }
    for (long long idx = 0; idx < table; ++idx)
        if (counts[idx] < b) return idx;
    return -1;
}

} // namespace property_detail

// Exhaustive check iterates every complete subgraph of size 0..a and every
// tuple over it; the first deficit in enumeration order is reported as the
// counterexample. With jobs > 1 the cliques are checked in parallel and the
// earliest violation still wins, so the result is identical.
inline PropertyReport has_property_P(const MixedGraph& g, int a, int b,
                                     const PropertyMode& mode = Exhaustive{}) {
    if (a < 0) throw std::domain_error("property size bound a must be >= 0");
    if (b < 1) throw std::domain_error("property witness bound b must be >= 1");
    const int c = g.spec().alphabet_size();
    {
        double table = 1;
        for (int i = 0; i < a; ++i) table *= c;
        if (table > 2e8) throw std::domain_error("tuple table c^a too large for this check");
    }

    PropertyReport report;
    report.a = a;
    report.b = b;

    if (std::holds_alternative<Sampled>(mode)) {
        const auto& sampled = std::get<Sampled>(mode);
        report.kind = CheckKind::sampled;
        report.trials = sampled.trials;
        report.seed = sampled.seed;
        Rng rng(sampled.seed);
        const int max_size = std::min(a, g.order());
        for (std::uint64_t trial = 0; trial < sampled.trials; ++trial) {
            const int size = rng.uniform_int(0, max_size);
            // Uniform complete subgraph of this size by rejection.
            std::vector<int> clique;
            bool have_clique = false;
            for (int attempt = 0; attempt < 200 && !have_clique; ++attempt) {
                clique.clear();
                while (static_cast<int>(clique.size()) < size) {
                    int v = static_cast<int>(rng.below(g.order()));
                    if (std::find(clique.begin(), clique.end(), v) == clique.end())
                        clique.push_back(v);
                }
                std::sort(clique.begin(), clique.end());
                have_clique = g.is_complete_subgraph(clique);
            }
            if (!have_clique) continue; // nothing of this size found; trial spent
            long long idx = 0, weight = 1;
            for (int r = 0; r < size; ++r) {
                idx += rng.below(c) * weight;
                weight *= c;
            }
            // Count extenders of the sampled tuple only.
            long long found = 0;
            CodeTuple tuple = property_detail::decode_tuple(idx, size, c);
            for (int x = 0; x < g.order(); ++x) {
                bool match = true;
                for (int r = 0; r < size; ++r) {
                    int code = g.code(x, clique[r]);
                    if (x == clique[r] || code != tuple[r]) {
                        match = false;
                        break;
                    }
                }
                if (match) ++found;
            }
            if (found < b) {
                report.holds = false;
                report.counterexample = PropertyCounterexample{clique, tuple, found};
                return report;
            }
        }
        report.holds = true;
        return report;
    }

    const auto& exhaustive = std::get<Exhaustive>(mode);
    report.kind = CheckKind::exhaustive;
    const auto cliques = property_detail::enumerate_cliques(g, std::min(a, g.order()));

    const int jobs = std::max(1, exhaustive.jobs);
    std::vector<std::size_t> violation_at(jobs, cliques.size());
    std::vector<long long> deficit_idx(jobs, -1);
    auto worker = [&](int job) {
        std::vector<long long> counts;
        for (std::size_t i = job; i < cliques.size(); i += jobs) {
            long long idx = property_detail::first_deficit(g, cliques[i], b, counts);
            if (idx >= 0) {
                violation_at[job] = i;
                deficit_idx[job] = idx;
                return;
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
        for (auto& th : pool) th.join();
    }

    std::size_t first = cliques.size();
    long long first_idx = -1;
    for (int j = 0; j < jobs; ++j)
        if (violation_at[j] < first) {
            first = violation_at[j];
            first_idx = deficit_idx[j];
        }
    if (first == cliques.size()) {
        report.holds = true;
        return report;
    }
    const auto& clique = cliques[first];
    std::vector<long long> counts;
    property_detail::first_deficit(g, clique, b, counts); // refill counts for the witness
    CodeTuple tuple = property_detail::decode_tuple(first_idx, static_cast<int>(clique.size()), c);
    report.holds = false;
    report.counterexample = PropertyCounterexample{clique, tuple, counts[first_idx]};
    return report;
}

} // namespace mgc
