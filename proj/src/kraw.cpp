#include "ternmin/kraw.hpp"

#include <array>
#include <stdexcept>

namespace ternmin {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
    return r;
}

} // namespace checked

namespace {

using PascalTable = std::array<std::array<std::int64_t, kMaxBinomialN + 1>, kMaxBinomialN + 1>;

// Built once on first use; read-only afterwards.
const PascalTable& pascal() {
    static const PascalTable table = [] {
        PascalTable t{};
        for (int n = 0; n <= kMaxBinomialN; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) t[n][k] = checked::add(t[n - 1][k - 1], t[n - 1][k]);
        }
        return t;
    }();
    return table;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked::mul(r, base);
    return r;
}

} // namespace

std::int64_t binomial(int n, int k) {
    if (n < 0 || n > kMaxBinomialN) throw std::out_of_range("binomial: n outside table");
    if (k < 0 || k > n) return 0;
    return pascal()[n][k];
}

std::int64_t krawtchouk(const KrawParams& p) {
    if (p.m < 1 || p.t < 0 || p.t > p.m || p.x < 0 || p.x > p.m || p.h < 2)
        throw std::invalid_argument("krawtchouk: parameters outside 0 <= t, x <= m");
    std::int64_t sum = 0;
    for (int j = 0; j <= p.t; ++j) {
        std::int64_t term = checked::mul(ipow(p.h - 1, p.t - j), checked::mul(binomial(p.x, j), binomial(p.m - p.x, p.t - j)));
        sum = checked::add(sum, (j % 2 == 0) ? term : -term);
    }
    return sum;
}

std::int64_t lloyd(int k, int x, int m, int h) {
    if (k < 0 || k > m) throw std::invalid_argument("lloyd: degree outside [0, m]");
    std::int64_t sum = 0;
    for (int t = 0; t <= k; ++t) sum = checked::add(sum, krawtchouk(KrawParams{t, x, m, h}));
    return sum;
}

std::int64_t sphere_size(int m, int j) { return checked::mul(ipow(2, j), binomial(m, j)); }

std::int64_t shell_sum(int m, int lo, int hi) {
    std::int64_t s = 0;
    for (int j = lo; j <= hi; ++j) s = checked::add(s, sphere_size(m, j));
    return s;
}

} // namespace ternmin
