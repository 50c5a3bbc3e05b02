#pragma once

// Exhaustive Krawtchouk/Lloyd identity sweeps shared by the unit and acceptance suites.
// Each returns the number of failed instances.

#include "ternmin/eisenstein.hpp"
#include "ternmin/gf3.hpp"
#include "ternmin/kraw.hpp"

#include <cstdlib>
#include <vector>

namespace ternmin::testing {

// Psi_k(x, m) = K_k(x-1, m-1);  K_t(0, m) = 2^t C(m, t);  |Psi_k(x, m)| <= 2^k C(m-1, k), tight at x = 1.
inline int lloyd_identity_failures(int max_m) {
    int bad = 0;
    for (int m = 2; m <= max_m; ++m) {
        for (int t = 0; t <= m; ++t) bad += krawtchouk(t, 0, m) != sphere_size(m, t);
        for (int k = 1; k <= m - 1; ++k) {
            const std::int64_t bound = sphere_size(m - 1, k);
            for (int x = 1; x <= m; ++x) {
                const std::int64_t psi = lloyd(k, x, m);
                bad += psi != krawtchouk(k, x - 1, m - 1);
                bad += std::llabs(psi) > bound;
            }
            bad += lloyd(k, 1, m) != bound;
        }
    }
    return bad;
}

// sum_{wt(v) = t} zeta^{w.v} = K_t(wt(w), m) for every w, accumulated in Z[zeta].
inline int character_sum_failures(int max_m) {
    int bad = 0;
    for (int m = 1; m <= max_m; ++m) {
        const std::uint32_t n = static_cast<std::uint32_t>(pow3(m));
        const auto weights = weight_table(m);
        std::vector<TritVector> vecs;
        vecs.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) vecs.emplace_back(i, m);
        std::vector<EisensteinInt> sums(m + 1);
        for (std::uint32_t w = 0; w < n; ++w) {
            std::fill(sums.begin(), sums.end(), EisensteinInt{});
            for (std::uint32_t v = 0; v < n; ++v) sums[weights[v]] = sums[weights[v]] + EisensteinInt::zeta_pow(dot(vecs[w], vecs[v]).value());
            for (int t = 0; t <= m; ++t) bad += !(sums[t] == EisensteinInt(krawtchouk(t, weights[w], m), 0));
        }
    }
    return bad;
}

// a_k > sum_{j<k} a_j with a_j = 2^j C(m, j), for 9 <= m, 2 <= k <= (m-1)/2.
inline int shell_dominance_failures(int max_m) {
    int bad = 0;
    for (int m = 9; m <= max_m; ++m)
        for (int k = 2; k <= (m - 1) / 2; ++k) bad += !(sphere_size(m, k) > shell_sum(m, 1, k - 1));
    return bad;
}

// sum_{j=1}^{k} 2^j C(m, j) != -2 (Psi_k(i, m) - 1), 5 <= m, 2 <= k <= (m-1)/2, 1 <= i <= m.
inline int lloyd_shell_failures(int max_m) {
    int bad = 0;
    for (int m = 5; m <= max_m; ++m)
        for (int k = 2; k <= (m - 1) / 2; ++k)
            for (int i = 1; i <= m; ++i) bad += shell_sum(m, 1, k) == -2 * (lloyd(k, i, m) - 1);
    return bad;
}

} // namespace ternmin::testing
