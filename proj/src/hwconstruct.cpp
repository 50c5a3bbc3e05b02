#include "ternmin/hwconstruct.hpp"

#include "ternmin/errors.hpp"
#include "ternmin/kraw.hpp"

#include <string>

namespace ternmin {

bool HWParams::admissible(int m, int k1, int k2) noexcept {
    return m >= 9 && m <= kMaxDimension && k1 >= 2 && k1 + 1 < k2 && k2 <= (m - 1) / 2;
}

HWParams::HWParams(int m, int k1, int k2) : m_(m), k1_(k1), k2_(k2) {
    if (!admissible(m, k1, k2))
        throw std::invalid_argument("(m, k1, k2) = (" + std::to_string(m) + ", " + std::to_string(k1) + ", " +
                                    std::to_string(k2) + ") outside 9 <= m, 2 <= k1 < k1 + 1 < k2 <= (m - 1) / 2");
    a_ = shell_sum(m, 1, k1 - 1);
    b_ = sphere_size(m, k1);
    c_ = shell_sum(m, k1 + 1, k2 - 1);
    d_ = sphere_size(m, k2);
    e_ = static_cast<std::int64_t>(pow3(m)) - 1 - (a_ + b_ + c_ + d_);
}

std::vector<HWParams> HWParams::all_for(int m) {
    std::vector<HWParams> out;
    for (int k1 = 2; k1 <= m; ++k1)
        for (int k2 = k1 + 2; k2 <= m; ++k2)
            if (admissible(m, k1, k2)) out.emplace_back(m, k1, k2);
    return out;
}

GreekTriple greek_triple(const HWParams& p, int i) {
    const int m = p.m();
    const std::int64_t psi_k1m1 = lloyd(p.k1() - 1, i, m);
    const std::int64_t psi_k1 = lloyd(p.k1(), i, m);
    const std::int64_t psi_k2m1 = lloyd(p.k2() - 1, i, m);
    const std::int64_t psi_k2 = lloyd(p.k2(), i, m);
    return {psi_k1m1 - 1, psi_k1 - psi_k1m1, psi_k2m1 - psi_k1, psi_k2 - psi_k2m1};
}

std::pair<TernaryFunction, TernaryFunction> build_fg(const HWParams& p) {
    const int m = p.m(), k1 = p.k1(), k2 = p.k2();
    const auto weights = weight_table(m);
    std::vector<std::uint8_t> f(weights.size(), 0), g(weights.size(), 0);
    for (std::size_t x = 0; x < weights.size(); ++x) {
        const int w = weights[x];
        if (w == 0) continue;
        const bool in_a = w <= k1 - 1, in_b = w == k1, in_c = w > k1 && w <= k2 - 1, in_d = w == k2;
        f[x] = (in_a || in_c || in_d) ? 1 : 0;
        g[x] = (in_b || in_c) ? 1 : in_d ? 2 : 0;
    }
    return {TernaryFunction(m, std::move(f)), TernaryFunction(m, std::move(g))};
}

CodeSpec build_spec(const HWParams& p, unsigned threads) {
    auto [f, g] = build_fg(p);
    return CodeSpec::validate(std::move(f), std::move(g), threads);
}

WeightDistribution closed_form_weight_distribution(const HWParams& p) {
    const int m = p.m(), k1 = p.k1(), k2 = p.k2();
    const std::int64_t n = static_cast<std::int64_t>(pow3(m));
    const std::int64_t base = n - n / 3;
    WeightDistribution d;
    d.entries[0] += 1;
    d.entries[base] += static_cast<std::uint64_t>(n - 1);
    d.entries[shell_sum(m, 1, k1 - 1) + shell_sum(m, k1 + 1, k2)] += 2;
    d.entries[shell_sum(m, k1, k2)] += 2;
    d.entries[shell_sum(m, 1, k2 - 1)] += 2;
    d.entries[shell_sum(m, 1, k1) + sphere_size(m, k2)] += 2;
    for (int i = 1; i <= m; ++i) {
        const std::uint64_t count = 2 * static_cast<std::uint64_t>(sphere_size(m, i));
        const std::int64_t psi_k1m1 = lloyd(k1 - 1, i, m), psi_k1 = lloyd(k1, i, m);
        const std::int64_t psi_k2m1 = lloyd(k2 - 1, i, m), psi_k2 = lloyd(k2, i, m);
        d.entries[base + psi_k2 - psi_k1 + psi_k1m1 - 1] += count;
        d.entries[base + psi_k2 - psi_k1m1] += count;
        d.entries[base + psi_k2m1 - 1] += count;
        d.entries[base + psi_k1 + psi_k2 - psi_k2m1 - 1] += count;
    }
    return d;
}

CompleteWeightEnumerator closed_form_cwe(const HWParams& p) {
    const std::int64_t n = static_cast<std::int64_t>(pow3(p.m()));
    const std::int64_t t = n / 3;
    const std::int64_t a = p.a(), b = p.b(), c = p.c(), d = p.d(), e = p.e();

    CompleteWeightEnumerator out;
    auto add = [&](std::int64_t n0, std::int64_t n1, std::int64_t n2, std::uint64_t mult) { out.terms[{n0, n1, n2}] += mult; };

    add(n - 1, 0, 0, 1);
    add(t - 1, t, t, static_cast<std::uint64_t>(n - 1));

    // v = 0, one codeword per nonzero (u, r): (1,0) (2,0) (0,1) (0,2) (1,1) (2,2) (1,2) (2,1).
    add(b + e, a + c + d, 0, 1);
    add(b + e, 0, a + c + d, 1);
    add(a + e, b + c, d, 1);
    add(a + e, d, b + c, 1);
    add(d + e, a + b, c, 1);
    add(d + e, c, a + b, 1);
    add(c + e, a, b + d, 1);
    add(c + e, b + d, a, 1);

    // v of weight i: 2^i C(m, i) codewords per nonzero (u, r).
    for (int i = 1; i <= p.m(); ++i) {
        const auto mult = static_cast<std::uint64_t>(sphere_size(p.m(), i));
        const auto [al, be, ga, de] = greek_triple(p, i);
        add(t - 1 - (be + ga + de), t + be + ga, t + de, mult);
        add(t - 1 - (be + ga + de), t + de, t + be + ga, mult);
        add(t - 1 - (al + ga + de), t + al + ga + de, t, mult);
        add(t - 1 - (al + ga + de), t, t + al + ga + de, mult);
        add(t - 1 - (al + be + ga), t + al + be, t + ga, mult);
        add(t - 1 - (al + be + ga), t + ga, t + al + be, mult);
        add(t - 1 - (al + be + de), t + al, t + be + de, mult);
        add(t - 1 - (al + be + de), t + be + de, t + al, mult);
    }
    return out;
}

ExtremeWeights theorem4_report(const HWParams& p) {
    const int m = p.m(), k1 = p.k1(), k2 = p.k2();
    const std::int64_t n = static_cast<std::int64_t>(pow3(m));
    const std::int64_t wmin = shell_sum(m, 1, k2 - 1);
    const std::int64_t wmax = n - n / 3 + sphere_size(m - 1, k2) - sphere_size(m - 1, k1 - 1);
    const bool ratio = 3 * wmin <= 4 * (n / 3) + 2 * sphere_size(m - 1, k2) - 2 * sphere_size(m - 1, k1 - 1);
    if (ratio != (3 * wmin <= 2 * wmax)) throw ConsistencyError("ratio inequality disagrees with 3 wmin <= 2 wmax");
    return {wmin, wmax, ashikhmin_barg(wmin, wmax), ratio};
}

ConditionChecks lemma_checks(const HWParams& p, const SweepOptions& options) {
    const auto spec = build_spec(p, options.threads);
    const auto report = theorem2_check(spec, options);
    return {report.condition1_first_holds, report.condition1_second_holds, report.condition2_holds, report.evaluations};
}

} // namespace ternmin
