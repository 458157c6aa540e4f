#pragma once

#include <stdexcept>
#include <string>

namespace mgc {

// Colour alphabet of a mixed graph: m edge colours and n arc colours.
//
// Every adjacency, seen from one of its endpoints x, is recorded by a single
// integer code in {1, ..., m+2n}:
//   1 .. m          edge of that colour
//   m+1 .. m+n      arc of colour (code - m) oriented away from x
//   m+n+1 .. m+2n   arc of colour (code - m - n) oriented towards x
// Code 0 is reserved for "not adjacent".
struct ColourSpec {
    int m = 0;
    int n = 0;

    int alphabet_size() const { return m + 2 * n; }

    bool valid() const { return m >= 0 && n >= 0 && alphabet_size() >= 1; }

    bool is_edge_code(int code) const { return code >= 1 && code <= m; }
    bool is_out_arc_code(int code) const { return code > m && code <= m + n; }
    bool is_in_arc_code(int code) const { return code > m + n && code <= m + 2 * n; }

    // Colour of an arc code (either orientation), in 1..n.
    int arc_colour(int code) const {
        return is_out_arc_code(code) ? code - m : code - m - n;
    }

    friend bool operator==(const ColourSpec&, const ColourSpec&) = default;
};

inline void require_valid(const ColourSpec& spec) {
    if (!spec.valid())
        throw std::domain_error("colour spec requires m >= 0, n >= 0 and m + 2n >= 1");
}

// The same adjacency seen from the other endpoint. Fixes 0 (non-adjacency)
// and edge codes; swaps the two arc ranges. An involution.
inline int dual(int code, const ColourSpec& spec) {
    require_valid(spec);
    if (code < 0 || code > spec.alphabet_size())
        throw std::domain_error("adjacency code " + std::to_string(code) +
                                " out of range 0.." + std::to_string(spec.alphabet_size()));
    if (code <= spec.m) return code;            // 0 and edge colours
    if (code <= spec.m + spec.n) return code + spec.n;
    return code - spec.n;
}

} // namespace mgc
