#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "generate.hpp"
#include "homomorphism.hpp"
#include "probability.hpp"
#include "property.hpp"

namespace mgc {

// ---- layered property verification -------------------------------------------

// Exhaustive layers are only attempted while the work estimate
// C(t,i) * c^i * t stays within the budget; beyond that the layer is
// sampled, which can refute but never certify.
struct LayerPolicy {
    double exhaustive_budget = 1e10;
    std::uint64_t sampled_trials = 100000;
    std::uint64_t seed = 0;
    int jobs = 1;
};

inline double layer_work_estimate(long long t, int i, int c) {
    double binom = 1;
    for (int r = 1; r <= i; ++r) binom = binom * static_cast<double>(t - r + 1) / r;
    double codes = 1;
    for (int r = 0; r < i; ++r) codes *= c;
    return binom * codes * static_cast<double>(t);
}

// For each layer i = 1..k, a report on P_{i, (k-i)(k-1)+1}.
inline std::vector<PropertyReport> layered_property_check(const MixedGraph& h, int k,
                                                          const LayerPolicy& policy = {}) {
    if (k < 1) throw std::domain_error("degree bound k must be >= 1");
    if (!h.is_complete()) throw std::domain_error("layered check expects a complete target");
    std::vector<PropertyReport> reports;
    const int c = h.spec().alphabet_size();
    for (int i = 1; i <= k; ++i) {
        const int b = static_cast<int>(layer_cutoff(k, i)) + 1;
        if (layer_work_estimate(h.order(), i, c) <= policy.exhaustive_budget)
            reports.push_back(has_property_P(h, i, b, Exhaustive{policy.jobs}));
        else
            reports.push_back(
                has_property_P(h, i, b, Sampled{policy.sampled_trials, Rng::derive(policy.seed, i)}));
    }
    return reports;
}

// ---- rejection sampling for a verified target ---------------------------------

struct FindTargetOutcome {
    std::optional<MixedGraph> target;
    std::vector<PropertyReport> reports; // layer reports of the returned target (or last trial)
    int trial = -1;                      // which trial succeeded
};

// Draws random complete targets until one passes every layer in the
// strongest affordable mode. Per-trial seeds derive from the master seed,
// so the outcome is a pure function of (spec, k, t, max_trials, seed).
inline FindTargetOutcome find_target(ColourSpec spec, int k, int t, int max_trials,
                                     std::uint64_t seed, const LayerPolicy& policy = {}) {
    require_valid(spec);
    if (t < k) throw std::domain_error("target order t must be >= k");
    FindTargetOutcome outcome;
    for (int trial = 0; trial < max_trials; ++trial) {
        MixedGraph h = random_complete(spec, t, Rng::derive(seed, trial));
        LayerPolicy trial_policy = policy;
        trial_policy.seed = Rng::derive(seed, 1000000 + trial);
        auto reports = layered_property_check(h, k, trial_policy);
        bool all_hold = true;
        for (const auto& r : reports)
            if (!r.holds) {
                all_hold = false;
                break;
            }
        outcome.reports = std::move(reports);
        if (all_hold) {
            outcome.target = std::move(h);
            outcome.trial = trial;
            return outcome;
        }
    }
    return outcome;
}

// ---- greedy extension against a rich complete target -------------------------

struct GreedyStep {
    int vertex = -1;
    std::vector<int> mapped_neighbours; // W: already-placed neighbours, ascending
    CodeTuple required;                 // b: codes the image must see towards f(W)
    long long candidates = 0;           // |X|
    int unplaced_neighbours = 0;        // |Y|
    int shielded = 0;                   // |Z|: placed vertices adjacent to Y
    int chosen = -1;
    bool distinctness_kept = true; // common-neighbour distinct-image rule respected
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
    std::optional<VertexMap> map; // nullopt = stuck
    int stuck_at = -1;            // vertex where extension failed
};

// Processes vertices in id order. At each step the candidate pool X is
// every target vertex whose codes towards the images of the placed
// neighbours match the source codes. The pool is then thinned by the images
// of placed vertices that share an unplaced neighbour with the current
// vertex (set Z); that thinning is what makes images of common-neighbour
// pairs distinct by the time the common neighbour is placed, and the layer
// bounds guarantee the pool survives it. Placed vertices that share an
// already-placed neighbour are avoided too whenever a candidate remains,
// which keeps the distinct-image rule blanket; in the measure-zero case
// where only such candidates remain, the guaranteed pool is used and the
// step is flagged.
inline GreedyTrace greedy_colouring(const MixedGraph& g, const MixedGraph& h, int k) {
    if (k < 1) throw std::domain_error("degree bound k must be >= 1");
    if (g.spec() != h.spec()) throw std::domain_error("greedy colouring requires matching specs");
    if (g.max_degree() > k) throw std::domain_error("graph maximum degree exceeds the bound k");
    if (!h.is_complete()) throw std::domain_error("greedy colouring expects a complete target");

    GreedyTrace trace;
    const int p = g.order();
    std::vector<int> image(p, -1);

    for (int v = 0; v < p; ++v) {
        GreedyStep step;
        step.vertex = v;
        const auto nbrs = g.neighbours(v);
        for (int u : nbrs)
            if (u < v) step.mapped_neighbours.push_back(u);
        for (int u : step.mapped_neighbours) step.required.push_back(g.code(v, u));

        // X: candidates consistent with every placed neighbour.
        std::vector<char> in_pool(h.order(), 1);
        for (int x = 0; x < h.order(); ++x) {
            for (std::size_t r = 0; r < step.mapped_neighbours.size(); ++r) {
                const int fu = image[step.mapped_neighbours[r]];
                if (x == fu || h.code(x, fu) != step.required[r]) {
                    in_pool[x] = 0;
                    break;
                }
            }
            if (in_pool[x]) ++step.candidates;
        }

        // Z: placed vertices adjacent to an unplaced neighbour of v.
        std::vector<char> shielded_image(h.order(), 0);
        std::vector<char> is_unplaced_nbr(p, 0);
        for (int u : nbrs)
            if (u > v) {
                is_unplaced_nbr[u] = 1;
                ++step.unplaced_neighbours;
            }
        for (int u = 0; u < v; ++u) {
            if (image[u] < 0) continue;
            for (int w : g.neighbours(u))
                if (is_unplaced_nbr[w]) {
                    if (!shielded_image[image[u]]) ++step.shielded;
                    shielded_image[image[u]] = 1;
                    break;
                }
        }

        // Placed vertices sharing a *placed* neighbour with v: avoiding
        // their images too keeps the distinct-image rule blanket.
        std::vector<char> soft_avoid(h.order(), 0);
        for (int w : step.mapped_neighbours)
            for (int u : g.neighbours(w))
                if (u < v && image[u] >= 0) soft_avoid[image[u]] = 1;

        int choice = -1, fallback = -1;
        for (int x = 0; x < h.order(); ++x) {
            if (!in_pool[x] || shielded_image[x]) continue;
            if (fallback < 0) fallback = x;
            if (!soft_avoid[x]) {
                choice = x;
                break;
            }
        }
        if (choice < 0 && fallback >= 0) {
            choice = fallback;
            step.distinctness_kept = false;
        }
        if (choice < 0) {
            trace.steps.push_back(std::move(step));
            trace.stuck_at = v;
            return trace;
        }
        step.chosen = choice;
        image[v] = choice;
        trace.steps.push_back(std::move(step));
    }

    VertexMap result{g, h, std::move(image)};
    if (!is_homomorphism(result))
        throw std::logic_error("greedy extension produced an invalid map");
    trace.map = std::move(result);
    return trace;
}

} // namespace mgc
