#include "doctest.h"

#include <cmath>

#include "mgc/probability.hpp"

using namespace mgc;

TEST_CASE("[params] canonical order k^2 c^(k+1)") {
    CHECK(lemma_params(4, 3).t == 3888);
    CHECK(lemma_params(2, 2).t == 32);
    CHECK(lemma_params(4, 3, 100).t == 100);
    CHECK_THROWS_AS(lemma_params(0, 3), std::domain_error);
    CHECK_THROWS_AS(lemma_params(4, 3, 2), std::domain_error); // t < k
}

TEST_CASE("[tail] hand-computed point: k=2, c=2, t=3, i=1") {
    LemmaParams params = lemma_params(2, 2, 3);
    CHECK(tail_probability(params, 1) == doctest::Approx(0.75).epsilon(1e-12));
    mpq_class exact = tail_probability_exact(params, 1);
    CHECK(exact == mpq_class(3, 4));
}

TEST_CASE("[tail] top layer collapses to a single term") {
    LemmaParams params = lemma_params(3, 2, 10);
    // i = k: cutoff 0, so the tail is (1 - 2^-3)^(10-3).
    mpq_class expected(1);
    mpq_class base(7, 8);
    for (int r = 0; r < 7; ++r) expected *= base;
    CHECK(tail_probability_exact(params, 3) == expected);
    CHECK(static_cast<double>(expl(log_tail_probability(params, 3))) ==
          doctest::Approx(expected.get_d()).epsilon(1e-12));
}

TEST_CASE("[tail] cutoff covering every trial gives probability one") {
    LemmaParams params = lemma_params(4, 3, 5);
    CHECK(log_tail_probability(params, 1) == 0.0L); // cutoff 9 >= 4 trials
    CHECK(tail_probability_exact(params, 1) == 1);
}

TEST_CASE("[tail] in range and decreasing in t") {
    long double previous = 1.0L;
    for (long long t : {100, 200, 400, 800, 1600}) {
        LemmaParams params = lemma_params(4, 3, t);
        long double lt = log_tail_probability(params, 2);
        CHECK(lt <= 0.0L);
        const bool decreasing = lt < previous || lt == 0.0L;
        CHECK(decreasing);
        previous = lt;
    }
}

TEST_CASE("[tail] the two backends agree everywhere sensible") {
    for (int k : {2, 3, 4, 5})
        for (int c : {2, 3, 4})
            for (long long t : {20, 50, 150}) {
                if (t <= k) continue;
                LemmaParams params = lemma_params(k, c, t);
                for (int i = 1; i <= k; ++i) {
                    long double lf = log_tail_probability(params, i);
                    long double le = log_of(tail_probability_exact(params, i));
                    CHECK(fabsl(lf - le) < 1e-13L);
                }
            }
}

TEST_CASE("[union] uninformative at tiny t, decisive at the canonical order") {
    CHECK(union_bound(lemma_params(4, 3, 10)) >= 1.0);

    LemmaParams canonical = lemma_params(4, 3);
    const long double log_float = log_union_bound(canonical);
    CHECK(log_float < 0.0L); // strictly below one
    const mpq_class exact = union_bound_exact(canonical);
    CHECK(exact < 1);
    CHECK(exact > 0);
    const long double log_exact = log_of(exact);
    CHECK(fabsl(expm1l(log_float - log_exact)) < 1e-12L); // 12 significant digits
}

TEST_CASE("[union] exact bound never exceeds the chained overestimate") {
    for (int k = 4; k <= 8; ++k)
        for (int c = 3; c <= 6; ++c) {
            LemmaParams params = lemma_params(k, c);
            CHECK(log_union_bound(params) <= log_chain_bound(params));
        }
}

TEST_CASE("[inequalities] hand-computed margins at k=4, c=3") {
    auto [m1, m2] = lemma_inequalities(4, 3);
    // 96 - (4 ln 4 + 11 ln 3) and (ln 2 + 48) - (10 ln 4 + 30 ln 3)
    CHECK(m1 == doctest::Approx(78.3700873801712).epsilon(1e-12));
    CHECK(m2 == doctest::Approx(1.8718349093177).epsilon(1e-10));
    CHECK(m1 > 0);
    CHECK(m2 > 0);
}

TEST_CASE("[inequalities] positive over the stated grid") {
    for (int k = 4; k <= 12; ++k)
        for (int c = 3; c <= 12; ++c) {
            auto [m1, m2] = lemma_inequalities(k, c);
            CHECK(m1 > 0);
            CHECK(m2 > 0);
        }
}

TEST_CASE("[ledger] assembled rows and exact cross-check") {
    ProbabilityLedger ledger = probability_ledger(lemma_params(4, 3));
    CHECK(ledger.rows.size() == 4);
    CHECK(ledger.rows[0].cutoff == 9);
    CHECK(ledger.rows[3].cutoff == 0);
    REQUIRE(ledger.log_union_exact);
    CHECK(fabsl(expm1l(ledger.log_union - *ledger.log_union_exact)) < 1e-12L);
    CHECK(*ledger.log_union_exact <= ledger.log_chain);
    CHECK_FALSE(ledger.union_exact_sci.empty());
    CHECK(ledger.ineq1_margin > 0);
    CHECK(ledger.ineq2_margin > 0);
}

TEST_CASE("[ledger] sci rendering of log-scale values") {
    CHECK(log_to_sci_string(0.0L, 4) == "1.0000e0");
    // ln(1/1024) ~ -6.93: value 9.7656e-4
    CHECK(log_to_sci_string(logl(1.0L / 1024.0L), 4) == "9.7656e-4");
    CHECK(log_to_sci_string(-std::numeric_limits<long double>::infinity()) == "0");
}
