#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mgc {

// A 1-factorization of the complete bipartite graph K_{c,c} with sides
// A = {0..c-1} and B = {0..c-1}: c perfect matchings that together use every
// one of the c*c pairs exactly once. perms[i][j] is the B-partner of
// A-vertex j in factor i+1 (factors are 1-based where they act as codes).
struct OneFactorization {
    int size = 0;
    std::vector<std::vector<int>> perms;
};

// Factor i matches A-vertex j with B-vertex (j + i) mod c. The rows of the
// resulting table form a Latin square, so the factors partition K_{c,c}.
inline OneFactorization cyclic_factorization(int c) {
    if (c < 1) throw std::domain_error("factorization size must be >= 1");
    OneFactorization f;
    f.size = c;
    f.perms.assign(c, std::vector<int>(c, 0));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) f.perms[i][j] = (j + i) % c;
    return f;
}

// Every row must be a permutation of 0..c-1 and, for each A-vertex, the
// column through the rows must hit every B-vertex once (disjoint factors
// covering all pairs).
inline void validate(const OneFactorization& f) {
    const int c = f.size;
    if (c < 1) throw std::domain_error("factorization size must be >= 1");
    if (static_cast<int>(f.perms.size()) != c)
        throw std::domain_error("factorization needs exactly " + std::to_string(c) + " factors");
    for (int i = 0; i < c; ++i) {
        if (static_cast<int>(f.perms[i].size()) != c)
            throw std::domain_error("factor " + std::to_string(i + 1) + " has wrong length");
        std::vector<bool> seen(c, false);
        for (int j = 0; j < c; ++j) {
            int b = f.perms[i][j];
            if (b < 0 || b >= c || seen[b])
                throw std::domain_error("factor " + std::to_string(i + 1) +
                                        " is not a permutation of 0.." + std::to_string(c - 1));
            seen[b] = true;
        }
    }
    for (int j = 0; j < c; ++j) {
        std::vector<bool> seen(c, false);
        for (int i = 0; i < c; ++i) {
            int b = f.perms[i][j];
            if (seen[b])
                throw std::domain_error("factors overlap on A-vertex " + std::to_string(j));
            seen[b] = true;
        }
    }
}

} // namespace mgc
