#pragma once

// Exact Krawtchouk and Lloyd polynomials.
//
//   K_t(x, m)   = sum_{j=0}^{t} (-1)^j (h-1)^{t-j} C(x, j) C(m-x, t-j)
//   Psi_k(x, m) = sum_{t=0}^{k} K_t(x, m)
//
// All arithmetic is signed 64-bit with overflow checks; std::overflow_error is
// thrown if a value leaves the int64 range.

#include <cstdint>

namespace ternmin {

/// Largest n for which binomial(n, k) is tabulated.
inline constexpr int kMaxBinomialN = 62;

struct KrawParams {
    int t = 0;  ///< degree
    int x = 0;  ///< evaluation point
    int m = 1;  ///< length
    int h = 3;  ///< alphabet size
};

/// C(n, k), zero when k < 0 or k > n. Requires 0 <= n <= kMaxBinomialN.
std::int64_t binomial(int n, int k);

/// Throws std::invalid_argument unless 0 <= t <= m and 0 <= x <= m.
std::int64_t krawtchouk(const KrawParams& p);
inline std::int64_t krawtchouk(int t, int x, int m) { return krawtchouk(KrawParams{t, x, m, 3}); }

std::int64_t lloyd(int k, int x, int m, int h = 3);

/// Size of the Hamming sphere of radius j in F_3^m: 2^j C(m, j).
std::int64_t sphere_size(int m, int j);

/// sum_{j=lo}^{hi} 2^j C(m, j); zero for an empty range.
std::int64_t shell_sum(int m, int lo, int hi);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
} // namespace checked

} // namespace ternmin
