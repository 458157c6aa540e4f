#include "doctest.h"

#include <cmath>
#include <sstream>

#include "mgc/generate.hpp"
#include "mgc/graph.hpp"
#include "mgc/text_io.hpp"

using namespace mgc;

namespace {

// Oriented path 0 -> 1 -> 2.
MixedGraph oriented_p3() {
    MixedGraph g(ColourSpec{0, 1}, 3);
    g.add_adjacency(0, 1, 1);
    g.add_adjacency(1, 2, 1);
    return g;
}

} // namespace

TEST_CASE("[dual] fixed points and arc swaps") {
    ColourSpec spec{1, 1};
    CHECK(dual(0, spec) == 0);
    CHECK(dual(1, spec) == 1);
    CHECK(dual(2, spec) == 3);
    CHECK(dual(3, spec) == 2);
    CHECK_THROWS_AS(dual(4, spec), std::domain_error);
    CHECK_THROWS_AS(dual(-1, spec), std::domain_error);
}

TEST_CASE("[dual] involution fixing edge codes, all small specs") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 3; ++n) {
            ColourSpec spec{m, n};
            if (!spec.valid()) continue;
            for (int code = 0; code <= spec.alphabet_size(); ++code) {
                CHECK(dual(dual(code, spec), spec) == code);
                if (code <= m) CHECK(dual(code, spec) == code);
            }
        }
}

TEST_CASE("[build] single arc populates both directions") {
    MixedGraph g = build_graph(ColourSpec{0, 1}, 2, {{0, 1, 1}});
    CHECK(g.code(0, 1) == 1);
    CHECK(g.code(1, 0) == 2);
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("[build] rejects duplicates, loops and bad codes") {
    CHECK_THROWS_AS(build_graph(ColourSpec{0, 1}, 2, {{0, 1, 1}, {1, 0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_graph(ColourSpec{0, 1}, 2, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(ColourSpec{0, 1}, 2, {{0, 1, 3}}), std::domain_error);
    CHECK_THROWS_AS(build_graph(ColourSpec{0, 1}, 2, {{0, 1, 0}}), std::domain_error);
}

TEST_CASE("[build] code matrix invariants hold for generated graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        MixedGraph g = random_bounded_degree(ColourSpec{2, 1}, 9, 4, 0.5, seed);
        for (int u = 0; u < g.order(); ++u) {
            CHECK(g.code(u, u) == 0);
            for (int v = 0; v < g.order(); ++v)
                CHECK(g.code(v, u) == dual(g.code(u, v), g.spec()));
        }
    }
}

TEST_CASE("[adjacency_vector] oriented path centre sees (in, out)") {
    MixedGraph g = oriented_p3();
    CHECK(g.adjacency_vector(1, std::vector<int>{0, 2}) == CodeTuple{2, 1});
    CHECK(g.adjacency_vector(1, std::vector<int>{}) == CodeTuple{});
    CHECK_THROWS_AS(g.adjacency_vector(0, std::vector<int>{2}), std::invalid_argument);
}

TEST_CASE("[adjacency_vector] monochromatic path") {
    MixedGraph g = build_graph(ColourSpec{1, 0}, 3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(g.adjacency_vector(1, std::vector<int>{0, 2}) == CodeTuple{1, 1});
}

TEST_CASE("[adjacency_vector] entries always land in 1..m+2n") {
    Rng rng(88);
    for (int i = 0; i < 50; ++i) {
        MixedGraph g = random_complete(ColourSpec{1, 2}, 8, rng.next());
        for (int x = 0; x < g.order(); ++x) {
            std::vector<int> rest;
            for (int v = 0; v < g.order(); ++v)
                if (v != x) rest.push_back(v);
            for (int code : g.adjacency_vector(x, rest)) {
                CHECK(code >= 1);
                CHECK(code <= g.spec().alphabet_size());
            }
        }
    }
}

TEST_CASE("[degree] max degree of standard shapes") {
    CHECK(MixedGraph(ColourSpec{1, 0}, 3).max_degree() == 0);
    CHECK(oriented_p3().max_degree() == 2);
    MixedGraph k4(ColourSpec{1, 1}, 4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_adjacency(u, v, 1 + (u + v) % 3);
    CHECK(k4.max_degree() == 3);
    CHECK(k4.is_complete());
}

TEST_CASE("[complete-subgraph] small sets") {
    MixedGraph g = oriented_p3();
    CHECK(g.is_complete_subgraph(std::vector<int>{}));
    CHECK(g.is_complete_subgraph(std::vector<int>{1}));
    CHECK_FALSE(g.is_complete_subgraph(std::vector<int>{0, 2}));
    MixedGraph cycle = build_graph(ColourSpec{0, 1}, 3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(cycle.is_complete_subgraph(std::vector<int>{0, 1, 2}));
}

TEST_CASE("[generate] degree cap and determinism") {
    CHECK(random_bounded_degree(ColourSpec{1, 1}, 5, 0, 0.9, 3).adjacency_count() == 0);
    MixedGraph g = random_bounded_degree(ColourSpec{0, 1}, 12, 2, 0.5, 7);
    CHECK(g.max_degree() <= 2);
    CHECK(g == random_bounded_degree(ColourSpec{0, 1}, 12, 2, 0.5, 7));
    CHECK(g != random_bounded_degree(ColourSpec{0, 1}, 12, 2, 0.5, 8));
}

TEST_CASE("[generate] complete graph and code uniformity") {
    CHECK(random_complete(ColourSpec{0, 1}, 1, 5).order() == 1);
    MixedGraph g = random_complete(ColourSpec{0, 1}, 50, 5);
    std::vector<int> all(50);
    for (int i = 0; i < 50; ++i) all[i] = i;
    CHECK(g.is_complete_subgraph(all));

    // Frequencies over ~1e5 pairs stay within 3 sigma of uniform per code.
    MixedGraph big = random_complete(ColourSpec{1, 1}, 448, 99);
    const int c = 3;
    std::vector<long long> counts(c + 1, 0);
    long long pairs = 0;
    for (int u = 0; u < big.order(); ++u)
        for (int v = u + 1; v < big.order(); ++v) {
            ++counts[big.code(u, v)];
            ++pairs;
        }
    const double expected = static_cast<double>(pairs) / c;
    const double sigma = std::sqrt(static_cast<double>(pairs) * (1.0 / c) * (1.0 - 1.0 / c));
    for (int code = 1; code <= c; ++code)
        CHECK(std::abs(counts[code] - expected) <= 3 * sigma);
}

TEST_CASE("[io] serialize then parse is the identity") {
    MixedGraph g = build_graph(ColourSpec{2, 1}, 5,
                               {{0, 1, 1}, {1, 2, 2}, {3, 2, 3}, {4, 0, 4}});
    CHECK(parse_graph(serialize_graph(g)) == g);
    // Canonical output is stable byte-for-byte.
    CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
}

TEST_CASE("[io] arcs keep their direction through the text form") {
    MixedGraph g = build_graph(ColourSpec{0, 2}, 3, {{2, 0, 1}, {1, 2, 2}});
    std::string text = serialize_graph(g);
    CHECK(text == "mixed 0 2 3\na 2 0 1\na 1 2 2\n");
    CHECK(parse_graph(text) == g);
}

TEST_CASE("[io] comments and blank lines are ignored") {
    std::string text = "# a graph\n\nmixed 0 1 2\n# the only arc\na 0 1 1\n";
    MixedGraph g = parse_graph(text);
    CHECK(g.order() == 2);
    CHECK(g.code(0, 1) == 1);
}

TEST_CASE("[io] parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("nonsense 1 2 3\n") == 1);
    CHECK(line_of("mixed 0 1 2\ne 0 1 1\n") == 2);          // edge colour with m = 0
    CHECK(line_of("mixed 0 1 2\na 0 1 1\na 1 0 1\n") == 3); // duplicate pair
    CHECK(line_of("mixed 0 1 2\na 1 1 1\n") == 2);          // loop
    CHECK(line_of("mixed 0 1 2\na 0 5 1\n") == 2);          // vertex range
    CHECK(line_of("mixed 0 1 2\na 0 1 2\n") == 2);          // arc colour range
    CHECK(line_of("mixed 0 0 2\n") == 1);                   // empty alphabet
    CHECK(line_of("") == 0);                                // missing header
    CHECK(line_of("mixed 0 1 2\na 0 1\n") == 2);            // too few tokens
    CHECK(line_of("mixed 0 1 2\na 0 1 1 9\n") == 2);        // trailing tokens
}

TEST_CASE("[io] round-trip over random graphs") {
    Rng rng(4242);
    for (int i = 0; i < 200; ++i) {
        int m = static_cast<int>(rng.below(3));
        int n = static_cast<int>(rng.below(3));
        if (m + 2 * n < 1) m = 1;
        int p = 1 + static_cast<int>(rng.below(20));
        MixedGraph g = random_bounded_degree(ColourSpec{m, n}, p, 5, 0.4, rng.next());
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
}

TEST_CASE("[io] factorization file round-trip and validation") {
    OneFactorization f = cyclic_factorization(4);
    std::ostringstream out;
    serialize_factorization(f, out);
    std::istringstream in(out.str());
    OneFactorization parsed = parse_factorization(in);
    CHECK(parsed.size == 4);
    CHECK(parsed.perms == f.perms);

    std::istringstream bad("factorization 2\n0 1\n0 1\n");
    CHECK_THROWS_AS(parse_factorization(bad), ParseError); // factors overlap
}
