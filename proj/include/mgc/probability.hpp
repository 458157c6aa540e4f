#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mgc {

// Parameters of the random-target existence argument: degree bound k, code
// alphabet size c, target order t (canonically k^2 * c^(k+1)).
struct LemmaParams {
    int k = 1;
    int c = 2;
    long long t = 0;
};

inline LemmaParams lemma_params(int k, int c, std::optional<long long> t = std::nullopt) {
    if (k < 1) throw std::domain_error("degree bound k must be >= 1");
    if (c < 1) throw std::domain_error("alphabet size c must be >= 1");
    LemmaParams params{k, c, 0};
    if (t) {
        params.t = *t;
    } else {
        long double canonical = static_cast<long double>(k) * k * powl(c, k + 1);
        if (canonical > 4e18) throw std::domain_error("canonical target order overflows");
        params.t = static_cast<long long>(k) * k;
        for (int i = 0; i < k + 1; ++i) params.t *= c;
    }
    if (params.t < params.k) throw std::domain_error("target order t must be >= k");
    return params;
}

// Cutoff of the bad event at layer i: at most (k-i)(k-1) extenders.
inline long long layer_cutoff(int k, int i) {
    return static_cast<long long>(k - i) * (k - 1);
}

// ---- log-space backend (long double, compensated summation) -----------------

namespace prob_detail {

inline long double log_add(long double a, long double b) {
    if (a == -std::numeric_limits<long double>::infinity()) return b;
    if (b == -std::numeric_limits<long double>::infinity()) return a;
    if (a < b) std::swap(a, b);
    return a + log1pl(expl(b - a));
}

// log C(n, j) as a compensated sum of log ratios; exact enough for well over
// twelve significant digits at the orders used here.
inline long double log_binomial(long long n, long long j) {
    if (j < 0 || j > n) return -std::numeric_limits<long double>::infinity();
    j = std::min(j, n - j);
    long double sum = 0.0L, carry = 0.0L;
    for (long long r = 1; r <= j; ++r) {
        long double term = logl(static_cast<long double>(n - j + r)) -
                           logl(static_cast<long double>(r));
        long double y = term - carry;
        long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace prob_detail

// log of the exact lower tail: probability that at most (k-i)(k-1) of t-i
// independent success-1/c^i trials succeed. Collapses to a single term when
// the cutoff is 0 and to log(1) when the cutoff swallows every trial.
inline long double log_tail_probability(const LemmaParams& params, int i) {
    if (i < 1 || i > params.k) throw std::domain_error("layer i must be in 1..k");
    if (params.t <= i) throw std::domain_error("target order t must exceed i");
    const long long n = params.t - i;
    const long long cutoff = layer_cutoff(params.k, i);
    if (cutoff >= n) return 0.0L; // the tail is the whole distribution
    const long double log_p = -static_cast<long double>(i) * logl(params.c);
    const long double p = expl(log_p);
    const long double log_q = log1pl(-p);
    long double total = -std::numeric_limits<long double>::infinity();
    for (long long j = 0; j <= cutoff; ++j) {
        long double term = prob_detail::log_binomial(n, j) + j * log_p + (n - j) * log_q;
        total = prob_detail::log_add(total, term);
    }
    return total;
}

inline double tail_probability(const LemmaParams& params, int i) {
    return static_cast<double>(expl(log_tail_probability(params, i)));
}

// log of the exact finite union bound sum_{i=1..k} C(t,i) c^i tail_i.
inline long double log_union_bound(const LemmaParams& params) {
    long double total = -std::numeric_limits<long double>::infinity();
    for (int i = 1; i <= params.k; ++i) {
        long double term = prob_detail::log_binomial(params.t, i) +
                           static_cast<long double>(i) * logl(params.c) +
                           log_tail_probability(params, i);
        total = prob_detail::log_add(total, term);
    }
    return total;
}

inline double union_bound(const LemmaParams& params) {
    return static_cast<double>(expl(log_union_bound(params)));
}

// log of the chained overestimate sum_{i=0..k} C(t,i) c^i e^{-t/c^i}
// t^{(k-i)(k-1)+1}. Only ever weaker than the exact union bound; reported
// for inspection.
inline long double log_chain_bound(const LemmaParams& params) {
    long double total = -std::numeric_limits<long double>::infinity();
    for (int i = 0; i <= params.k; ++i) {
        long double term = prob_detail::log_binomial(params.t, i) +
                           static_cast<long double>(i) * logl(params.c) -
                           static_cast<long double>(params.t) * powl(params.c, -i) +
                           static_cast<long double>(layer_cutoff(params.k, i) + 1) *
                               logl(static_cast<long double>(params.t));
        total = prob_detail::log_add(total, term);
    }
    return total;
}

// Margins of the two logarithmic inequalities the existence argument needs;
// positive margin = the inequality holds in the needed direction.
inline std::pair<double, double> lemma_inequalities(int k, int c) {
    if (k < 1) throw std::domain_error("degree bound k must be >= 1");
    if (c < 2) throw std::domain_error("alphabet size c must be >= 2");
    const double lk = std::log(static_cast<double>(k));
    const double lc = std::log(static_cast<double>(c));
    const double margin1 = static_cast<double>(k) * k * (c - 1) * c -
                           ((2.0 * k - 4.0) * lk + ((k + 1.0) * (k - 2.0) + 1.0) * lc);
    const double margin2 = (std::log(static_cast<double>(c - 1)) + static_cast<double>(c) * k * k) -
                           ((2.0 * k + 2.0) * lk + (k + 1.0) * (k + 2.0) * lc);
    return {margin1, margin2};
}

// ---- exact rational backend (GMP) -------------------------------------------

// Exact tail: sum_{j<=cutoff} C(n,j) (c^i - 1)^(n-j) / c^(i n). Single
// common denominator keeps it one big-integer sum.
inline mpq_class tail_probability_exact(const LemmaParams& params, int i) {
    if (i < 1 || i > params.k) throw std::domain_error("layer i must be in 1..k");
    if (params.t <= i) throw std::domain_error("target order t must exceed i");
    const unsigned long n = static_cast<unsigned long>(params.t - i);
    const long long cutoff = layer_cutoff(params.k, i);
    mpz_class den_base;
    mpz_ui_pow_ui(den_base.get_mpz_t(), params.c, i); // c^i
    const mpz_class q_base = den_base - 1;
    if (cutoff >= static_cast<long long>(n)) return {1};
    mpz_class numerator = 0;
    for (long long j = 0; j <= cutoff; ++j) {
        mpz_class binom, power;
        mpz_bin_uiui(binom.get_mpz_t(), n, static_cast<unsigned long>(j));
        mpz_pow_ui(power.get_mpz_t(), q_base.get_mpz_t(), n - static_cast<unsigned long>(j));
        numerator += binom * power;
    }
    mpz_class denominator;
    mpz_pow_ui(denominator.get_mpz_t(), den_base.get_mpz_t(), n);
    mpq_class result(numerator, denominator);
    result.canonicalize();
    return result;
}

inline mpq_class union_bound_exact(const LemmaParams& params) {
    mpq_class total = 0;
    for (int i = 1; i <= params.k; ++i) {
        mpz_class binom, codes;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(params.t),
                     static_cast<unsigned long>(i));
        mpz_ui_pow_ui(codes.get_mpz_t(), params.c, i);
        total += mpq_class(binom * codes) * tail_probability_exact(params, i);
    }
    return total;
}

// Natural log of a positive rational, via mantissa/exponent extraction so
// values far below double range stay representable.
inline long double log_of(const mpq_class& value) {
    if (value <= 0) throw std::domain_error("log of non-positive rational");
    signed long exp_num = 0, exp_den = 0;
    const double mant_num = mpz_get_d_2exp(&exp_num, value.get_num().get_mpz_t());
    const double mant_den = mpz_get_d_2exp(&exp_den, value.get_den().get_mpz_t());
    const long double ln2 = 0.6931471805599453094172321214581766L;
    return logl(mant_num) - logl(mant_den) +
           static_cast<long double>(exp_num - exp_den) * ln2;
}

// "3.14159e-1303"-style rendering of e^(ln_value) without underflow.
inline std::string log_to_sci_string(long double ln_value, int digits = 12) {
    if (ln_value == -std::numeric_limits<long double>::infinity()) return "0";
    const long double log10_value = ln_value / logl(10.0L);
    long long exponent = static_cast<long long>(floorl(log10_value));
    long double mantissa = powl(10.0L, log10_value - exponent);
    // Guard the edge where rounding pushes the mantissa to 10.
    if (mantissa >= 10.0L) {
        mantissa /= 10.0L;
        ++exponent;
    }
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << static_cast<double>(mantissa) << 'e' << exponent;
    return out.str();
}

// ---- the assembled ledger ----------------------------------------------------

struct LedgerRow {
    int i = 0;
    long long cutoff = 0;
    long double log_tail = 0;           // log-space backend
    std::optional<long double> log_tail_exact; // rational backend, when computed
};

struct ProbabilityLedger {
    LemmaParams params;
    std::vector<LedgerRow> rows;
    long double log_union = 0;
    std::optional<long double> log_union_exact;
    long double log_chain = 0;
    double ineq1_margin = 0;
    double ineq2_margin = 0;
    // Exact decimal rendering of the union bound when the rational backend ran.
    std::string union_exact_sci;
};

// The rational backend is feasible far beyond the canonical desk-scale
// orders but is pointless for t in the hundreds of millions; cap it.
inline bool exact_backend_feasible(const LemmaParams& params) { return params.t <= 100000; }

inline ProbabilityLedger probability_ledger(const LemmaParams& params,
                                            bool want_exact = true) {
    ProbabilityLedger ledger;
    ledger.params = params;
    const bool exact = want_exact && exact_backend_feasible(params);
    for (int i = 1; i <= params.k; ++i) {
        LedgerRow row;
        row.i = i;
        row.cutoff = layer_cutoff(params.k, i);
        row.log_tail = log_tail_probability(params, i);
        if (exact) row.log_tail_exact = log_of(tail_probability_exact(params, i));
        ledger.rows.push_back(row);
    }
    ledger.log_union = log_union_bound(params);
    ledger.log_chain = log_chain_bound(params);
    if (exact) {
        const mpq_class u = union_bound_exact(params);
        ledger.log_union_exact = log_of(u);
        ledger.union_exact_sci = log_to_sci_string(*ledger.log_union_exact);
    }
    if (params.c >= 2) {
        auto [m1, m2] = lemma_inequalities(params.k, params.c);
        ledger.ineq1_margin = m1;
        ledger.ineq2_margin = m2;
    }
    return ledger;
}

} // namespace mgc
