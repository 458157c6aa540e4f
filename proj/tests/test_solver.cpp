#include "doctest.h"

#include "mgc/bounds.hpp"
#include "mgc/chromatic.hpp"
#include "mgc/generate.hpp"
#include "mgc/homomorphism.hpp"

using namespace mgc;

namespace {

MixedGraph oriented_p3() {
    return build_graph(ColourSpec{0, 1}, 3, {{0, 1, 1}, {1, 2, 1}});
}

MixedGraph directed_triangle() {
    return build_graph(ColourSpec{0, 1}, 3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
}

MixedGraph single_arc() {
    return build_graph(ColourSpec{0, 1}, 2, {{0, 1, 1}});
}

} // namespace

TEST_CASE("[hom] identity and constant maps") {
    MixedGraph g = random_bounded_degree(ColourSpec{1, 1}, 8, 3, 0.5, 11);
    std::vector<int> identity(g.order());
    for (int v = 0; v < g.order(); ++v) identity[v] = v;
    CHECK(is_homomorphism(g, g, identity));

    MixedGraph edgeless(ColourSpec{1, 0}, 4), point(ColourSpec{1, 0}, 1);
    CHECK(is_homomorphism(edgeless, point, std::vector<int>{0, 0, 0, 0}));
}

TEST_CASE("[hom] folding the oriented path onto one arc reverses a code") {
    // 0 -> 1 -> 2 folded as (a, b, a) would need the arc b -> a.
    CHECK_FALSE(is_homomorphism(oriented_p3(), single_arc(), std::vector<int>{0, 1, 0}));
    // The alternating path 0 -> 1 <- 2 folds fine.
    MixedGraph alt = build_graph(ColourSpec{0, 1}, 3, {{0, 1, 1}, {2, 1, 1}});
    CHECK(is_homomorphism(alt, single_arc(), std::vector<int>{0, 1, 0}));
}

TEST_CASE("[hom] search finds maps and proves absences") {
    MixedGraph g = random_bounded_degree(ColourSpec{0, 1}, 7, 3, 0.5, 5);
    auto self = find_homomorphism(g, g);
    REQUIRE(self);
    CHECK(is_homomorphism(*self));

    auto into_cycle = find_homomorphism(oriented_p3(), directed_triangle());
    REQUIRE(into_cycle);
    CHECK(is_homomorphism(*into_cycle));

    // Independent check that no map of the path into one arc exists: all
    // 2^3 images, by hand.
    MixedGraph arc = single_arc();
    int count = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                if (is_homomorphism(oriented_p3(), arc, std::vector<int>{a, b, c})) ++count;
    CHECK(count == 0);
    CHECK_FALSE(find_homomorphism(oriented_p3(), arc));

    CHECK_THROWS_AS(find_homomorphism(oriented_p3(), MixedGraph(ColourSpec{1, 0}, 2)),
                    std::domain_error);
}

TEST_CASE("[quotient] identity partition reproduces the graph") {
    MixedGraph g = random_bounded_degree(ColourSpec{2, 0}, 6, 3, 0.5, 17);
    Partition singleton;
    singleton.block_of.resize(g.order());
    for (int v = 0; v < g.order(); ++v) singleton.block_of[v] = v;
    singleton.blocks = g.order();
    auto q = quotient(g, singleton);
    REQUIRE(q);
    CHECK(*q == g);
}

TEST_CASE("[quotient] conflicts are detected with witnesses") {
    MixedGraph g = oriented_p3();

    Partition adjacent_together{{0, 0, 1}, 2};
    QuotientConflict conflict;
    CHECK_FALSE(quotient(g, adjacent_together, &conflict));
    CHECK(conflict.same_block);
    CHECK(conflict.u == 0);
    CHECK(conflict.v == 1);

    // Blocks {0,2} and {1} disagree: 0 sees 1 as an out-arc, 2 sees it as in.
    Partition folded{{0, 1, 0}, 2};
    CHECK_FALSE(quotient(g, folded, &conflict));
    CHECK_FALSE(conflict.same_block);
}

TEST_CASE("[chi] paths and complete graphs") {
    CHECK(chromatic_number(oriented_p3()).chi == 3);
    MixedGraph alt = build_graph(ColourSpec{0, 1}, 3, {{0, 1, 1}, {2, 1, 1}});
    CHECK(chromatic_number(alt).chi == 2);

    for (int q = 1; q <= 5; ++q) {
        MixedGraph k(ColourSpec{1, 1}, q);
        for (int u = 0; u < q; ++u)
            for (int v = u + 1; v < q; ++v) k.add_adjacency(u, v, 1 + (u + 2 * v) % 3);
        CHECK(chromatic_number(k).chi == q);
    }

    CHECK(chromatic_number(MixedGraph(ColourSpec{1, 0}, 4)).chi == 1);
    CHECK(chromatic_number(MixedGraph(ColourSpec{1, 0}, 0)).chi == 0);
}

TEST_CASE("[chi] witness is a checked colouring") {
    MixedGraph g = random_bounded_degree(ColourSpec{1, 1}, 8, 4, 0.55, 23);
    ChromaticResult result = chromatic_number(g);
    CHECK(result.witness_target.order() == result.chi);
    CHECK(is_homomorphism(result.witness_map));
    auto part = fibres(result.witness_map);
    CHECK(part.blocks == result.chi);
    CHECK(quotient(g, part));
}

TEST_CASE("[chi-oracle] tiny values") {
    CHECK(chromatic_number_oracle(build_graph(ColourSpec{1, 0}, 2, {{0, 1, 1}}), 2) == 2);
    CHECK(chromatic_number_oracle(MixedGraph(ColourSpec{1, 0}, 3), 3) == 1);
    CHECK(chromatic_number_oracle(MixedGraph(ColourSpec{1, 0}, 0), 0) == 0);
    // Bounded search can come up empty.
    CHECK_FALSE(chromatic_number_oracle(directed_triangle(), 2));
}

TEST_CASE("[chi-oracle] agreement with the partition solver, small sample") {
    // The full p <= 4 sweep is in the acceptance suite; spot-check here.
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        ColourSpec spec = (i % 2) ? ColourSpec{0, 1} : ColourSpec{1, 1};
        MixedGraph g = random_bounded_degree(spec, 4, 3, 0.55, rng.next());
        auto oracle = chromatic_number_oracle(g, 4);
        REQUIRE(oracle);
        CHECK(*oracle == chromatic_number(g).chi);
    }
}

TEST_CASE("[chi] monotone under adjacency addition, sample") {
    Rng rng(77);
    for (int i = 0; i < 60; ++i) {
        MixedGraph g = random_bounded_degree(ColourSpec{1, 1}, 5, 4, 0.4, rng.next());
        MixedGraph g2 = g;
        bool added = false;
        for (int u = 0; u < 5 && !added; ++u)
            for (int v = u + 1; v < 5 && !added; ++v)
                if (!g2.adjacent(u, v)) {
                    g2.add_adjacency(u, v, 1 + static_cast<int>(rng.below(3)));
                    added = true;
                }
        if (!added) continue;
        CHECK(chromatic_number(g2).chi >= chromatic_number(g).chi);
    }
}

TEST_CASE("[bounds] closed forms at pinned points") {
    BoundTable t1 = bounds(2, ColourSpec{0, 1});
    REQUIRE(t1.sopena);
    CHECK(*t1.sopena == 12);

    BoundTable t2 = bounds(1, ColourSpec{2, 0});
    CHECK_FALSE(t2.sopena);
    REQUIRE(t2.sopena_formula);
    CHECK(*t2.sopena_formula == 1);

    BoundTable t3 = bounds(4, ColourSpec{1, 1});
    REQUIRE(t3.ksz);
    CHECK(*t3.ksz == 3888);
    CHECK_FALSE(t3.dns); // needs maximum degree >= 5

    BoundTable t4 = bounds(5, ColourSpec{0, 1});
    REQUIRE(t4.dns);
    CHECK(*t4.dns == 2 * 256 * 2); // 2 * 4^2 * 2^(5-2+2) = 1024
    CHECK(*t4.dns == 1024);
    REQUIRE(t4.lower_floor);
    CHECK(*t4.lower_floor == 5); // floor(2^2.5)
    CHECK(*t4.lower_ceil == 6);

    BoundTable t5 = bounds(4, ColourSpec{0, 1});
    CHECK(*t5.lower_floor == 4);
    CHECK(*t5.lower_ceil == 4);
}

TEST_CASE("[bounds] one-universal minimum order") {
    CHECK(min_one_universal_size(ColourSpec{1, 0}) == 2);
    CHECK(min_one_universal_size(ColourSpec{2, 0}) == 3);
    CHECK(min_one_universal_size(ColourSpec{0, 1}) == 2);
    CHECK(min_one_universal_size(ColourSpec{0, 2}) == 3);
    CHECK(min_one_universal_size(ColourSpec{3, 3}) == 4);
}

TEST_CASE("[bounds] wide arithmetic helpers") {
    CHECK(to_string(static_cast<Wide>(0)) == "0");
    CHECK(to_string(static_cast<Wide>(1234567890123456789ULL)) == "1234567890123456789");
    CHECK(checked_pow(10, 39) == std::nullopt); // past 128-bit range
    CHECK(*checked_pow(2, 127) == static_cast<Wide>(1) << 126 << 1);
    CHECK(isqrt(static_cast<Wide>(15)) == 3);
    CHECK(isqrt(static_cast<Wide>(16)) == 4);
}
