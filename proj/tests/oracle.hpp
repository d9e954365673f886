#pragma once

// Independent oracles for the test suites: a naive Laplace-expansion
// determinant and a tiny deterministic generator for random exact inputs.
// Nothing here shares code with the Bareiss path under test.

#include <cstdint>
#include <vector>

#include "holodet/det.hpp"

namespace oracle {

inline holodet::MuPoly laplace_det(const std::vector<std::vector<holodet::MuPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return holodet::MuPoly::one();
    if (n == 1) return m[0][0];
    holodet::MuPoly sum;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<holodet::MuPoly>> sub(n - 1);
        for (int i = 1; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (k != j) sub[i - 1].push_back(m[i][k]);
        holodet::MuPoly term = m[0][j] * laplace_det(sub);
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

inline holodet::MuPoly laplace_det(const holodet::SymMatrix& m) { return laplace_det(m.entries); }

// Deterministic xorshift generator: identical sequences on every platform.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 2654435761ULL + 1) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long integer(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    holodet::Rational rational(long max_num = 20, long max_den = 7) {
        return holodet::rat(integer(-max_num, max_num), integer(1, max_den));
    }
    holodet::MuPoly poly(int max_degree) {
        std::vector<holodet::Rational> c;
        int d = static_cast<int>(integer(0, max_degree));
        for (int i = 0; i <= d; ++i) c.push_back(rational(9, 3));
        return holodet::MuPoly(std::move(c));
    }
    holodet::SymMatrix matrix(int n, int max_degree) {
        holodet::SymMatrix m;
        m.n = n;
        m.entries.assign(n, std::vector<holodet::MuPoly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.entries[i][j] = poly(max_degree);
        return m;
    }
};

}  // namespace oracle
