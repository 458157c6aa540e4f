#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "colour_spec.hpp"

namespace mgc {

// 128-bit unsigned arithmetic for the closed-form bounds, which outgrow 64
// bits already at moderate degree. Entries that overflow even this are
// reported as not-available rather than wrapped.
using Wide = unsigned __int128;

inline std::string to_string(Wide value) {
    if (value == 0) return "0";
    std::string out;
    while (value > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    return out;
}

inline std::optional<Wide> checked_mul(Wide a, Wide b) {
    if (a != 0 && b > static_cast<Wide>(-1) / a) return std::nullopt;
    return a * b;
}

inline std::optional<Wide> checked_pow(Wide base, int exponent) {
    Wide result = 1;
    for (int i = 0; i < exponent; ++i) {
        auto next = checked_mul(result, base);
        if (!next) return std::nullopt;
        result = *next;
    }
    return result;
}

inline Wide isqrt(Wide value) {
    if (value < 2) return value;
    Wide x = value, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + value / x) / 2;
    }
    return x;
}

// The four closed-form chromatic bounds in terms of the maximum degree and
// the code alphabet size c = m + 2n. Each entry is nullopt outside its
// stated validity range (or on 128-bit overflow).
struct BoundTable {
    int delta = 0;
    ColourSpec spec;
    std::optional<Wide> sopena;         // (2D-1) c^(2D-2), stated for D >= 2
    std::optional<Wide> sopena_formula; // the same formula evaluated for D >= 1
    std::optional<Wide> ksz;            // D^2 c^(D+1)
    std::optional<Wide> dns;            // 2 (D-1)^c c^(D - min(c,3) + 2), c >= 2 and D >= 5
    std::optional<Wide> lower_floor;    // floor(c^(D/2))
    std::optional<Wide> lower_ceil;     // ceil(c^(D/2))
};

inline BoundTable bounds(int delta, ColourSpec spec) {
    require_valid(spec);
    if (delta < 0) throw std::domain_error("maximum degree must be >= 0");
    const Wide c = static_cast<Wide>(spec.alphabet_size());
    BoundTable table;
    table.delta = delta;
    table.spec = spec;

    if (delta >= 1) {
        if (auto power = checked_pow(c, 2 * delta - 2))
            table.sopena_formula = checked_mul(static_cast<Wide>(2 * delta - 1), *power);
        if (delta >= 2) table.sopena = table.sopena_formula;
    }

    if (auto power = checked_pow(c, delta + 1))
        table.ksz = checked_mul(static_cast<Wide>(delta) * static_cast<Wide>(delta), *power);

    const int ci = spec.alphabet_size();
    if (ci >= 2 && delta >= 5) {
        auto base = checked_pow(static_cast<Wide>(delta - 1), ci);
        auto power = checked_pow(c, delta - std::min(ci, 3) + 2);
        if (base && power)
            if (auto product = checked_mul(*base, *power)) table.dns = checked_mul(2, *product);
    }

    // c^(D/2): exact integer for even D, floor/ceil pair around c^(D/2) =
    // sqrt(c^D) for odd D.
    if (auto power = checked_pow(c, delta)) {
        Wide root = isqrt(*power);
        table.lower_floor = root;
        table.lower_ceil = root + (root * root < *power ? 1 : 0);
    }
    return table;
}

// Minimum order of a target that hosts every graph of maximum degree 1:
// the least c whose complete graph has at least m + n adjacency slots.
inline int min_one_universal_size(ColourSpec spec) {
    require_valid(spec);
    const long long needed = static_cast<long long>(spec.m) + spec.n;
    int c = 1;
    while (static_cast<long long>(c) * (c - 1) / 2 < needed) ++c;
    return c;
}

} // namespace mgc
