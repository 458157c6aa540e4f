#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorization.hpp"
#include "graph.hpp"

namespace mgc {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

namespace io_detail {

// Splits a line into whitespace-separated tokens; returns empty for blank
// lines and full-line '#' comments.
inline std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (!out.empty() || tok[0] != '#') out.push_back(tok);
        else return {};
    }
    return out;
}

inline long long parse_int(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

} // namespace io_detail

// Graph text format, one graph per stream:
//   mixed <m> <n> <p>
//   e <u> <v> <colour>     edge, colour in 1..m
//   a <u> <v> <colour>     arc u -> v, colour in 1..n
// '#' starts a full-line comment; blank lines are ignored. Every MixedGraph
// invariant violation is reported with the offending line number.
inline MixedGraph parse_graph(std::istream& in) {
    using io_detail::parse_int;
    using io_detail::tokens_of;

    MixedGraph g;
    bool have_header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "mixed")
                throw ParseError(lineno, "expected header 'mixed <m> <n> <p>'");
            if (toks.size() != 4)
                throw ParseError(lineno, "header needs exactly 3 numbers: mixed <m> <n> <p>");
            long long m = parse_int(toks[1], lineno, "edge colour count");
            long long n = parse_int(toks[2], lineno, "arc colour count");
            long long p = parse_int(toks[3], lineno, "vertex count");
            if (m < 0 || n < 0 || m + 2 * n < 1)
                throw ParseError(lineno, "need m >= 0, n >= 0 and m + 2n >= 1");
            if (p < 0) throw ParseError(lineno, "vertex count must be >= 0");
            try {
                g = MixedGraph(ColourSpec{static_cast<int>(m), static_cast<int>(n)},
                               static_cast<int>(p));
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            have_header = true;
            continue;
        }
        if (toks[0] != "e" && toks[0] != "a")
            throw ParseError(lineno, "expected 'e' or 'a' adjacency line, got '" + toks[0] + "'");
        if (toks.size() != 4)
            throw ParseError(lineno, "adjacency line needs 'e|a <u> <v> <colour>'");
        long long u = parse_int(toks[1], lineno, "vertex");
        long long v = parse_int(toks[2], lineno, "vertex");
        long long colour = parse_int(toks[3], lineno, "colour");
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
            throw ParseError(lineno, "vertex out of range 0.." + std::to_string(g.order() - 1));
        const auto& spec = g.spec();
        int code;
        if (toks[0] == "e") {
            if (colour < 1 || colour > spec.m)
                throw ParseError(lineno, "edge colour out of range 1.." + std::to_string(spec.m));
            code = static_cast<int>(colour);
        } else {
            if (colour < 1 || colour > spec.n)
                throw ParseError(lineno, "arc colour out of range 1.." + std::to_string(spec.n));
            code = spec.m + static_cast<int>(colour);
        }
        try {
            g.add_adjacency(static_cast<int>(u), static_cast<int>(v), code);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_header) throw ParseError(lineno, "missing 'mixed <m> <n> <p>' header");
    return g;
}

inline MixedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline MixedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

// Emits adjacencies sorted by (min endpoint, max endpoint); arcs keep their
// real direction. Output is byte-stable for equal graphs.
inline void serialize_graph(const MixedGraph& g, std::ostream& out,
                            const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << '\n';
    const auto& spec = g.spec();
    out << "mixed " << spec.m << ' ' << spec.n << ' ' << g.order() << '\n';
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            int code = g.code(u, v);
            if (code == 0) continue;
            if (spec.is_edge_code(code))
                out << "e " << u << ' ' << v << ' ' << code << '\n';
            else if (spec.is_out_arc_code(code))
                out << "a " << u << ' ' << v << ' ' << spec.arc_colour(code) << '\n';
            else
                out << "a " << v << ' ' << u << ' ' << spec.arc_colour(code) << '\n';
        }
    }
}

inline std::string serialize_graph(const MixedGraph& g,
                                   const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    serialize_graph(g, out, comments);
    return out.str();
}

// Factorization file format:
//   factorization <c>
//   then c lines, each a permutation of 0..c-1 (B-partners of A-vertices).
inline OneFactorization parse_factorization(std::istream& in) {
    using io_detail::parse_int;
    using io_detail::tokens_of;

    OneFactorization f;
    bool have_header = false;
    int rows = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "factorization" || toks.size() != 2)
                throw ParseError(lineno, "expected header 'factorization <c>'");
            long long c = parse_int(toks[1], lineno, "factorization size");
            if (c < 1) throw ParseError(lineno, "factorization size must be >= 1");
            f.size = static_cast<int>(c);
            f.perms.assign(f.size, {});
            have_header = true;
            continue;
        }
        if (rows >= f.size) throw ParseError(lineno, "more factors than declared");
        if (static_cast<int>(toks.size()) != f.size)
            throw ParseError(lineno, "factor needs exactly " + std::to_string(f.size) + " entries");
        std::vector<int> perm;
        for (const auto& tok : toks)
            perm.push_back(static_cast<int>(parse_int(tok, lineno, "B-vertex")));
        f.perms[rows++] = std::move(perm);
    }
    if (!have_header) throw ParseError(lineno, "missing 'factorization <c>' header");
    if (rows != f.size) throw ParseError(lineno, "fewer factors than declared");
    try {
        validate(f);
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
    return f;
}

inline OneFactorization parse_factorization_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open factorization file '" + path + "'");
    return parse_factorization(in);
}

inline void serialize_factorization(const OneFactorization& f, std::ostream& out) {
    out << "factorization " << f.size << '\n';
    for (const auto& perm : f.perms) {
        for (int j = 0; j < f.size; ++j) out << perm[j] << (j + 1 == f.size ? '\n' : ' ');
    }
}

} // namespace mgc
