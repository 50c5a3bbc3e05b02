#pragma once

// Weight-ball construction of (f, g).
//
// With shells A = {1 <= wt <= k1-1}, B = {wt = k1}, C = {k1 < wt <= k2-1},
// D = {wt = k2}:
//   f = 1 on A u C u D, else 0;
//   g = 1 on B u C, 2 on D, else 0.
// Parameters must satisfy m >= 9 and 2 <= k1 < k1 + 1 < k2 <= floor((m-1)/2).

#include "ternmin/code.hpp"
#include "ternmin/minimality.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ternmin {

class HWParams {
public:
    /// Throws std::invalid_argument outside the admissible window.
    HWParams(int m, int k1, int k2);

    /// True iff (m, k1, k2) lies in the admissible window.
    static bool admissible(int m, int k1, int k2) noexcept;
    /// Every admissible (k1, k2) for the given m.
    static std::vector<HWParams> all_for(int m);

    int m() const noexcept { return m_; }
    int k1() const noexcept { return k1_; }
    int k2() const noexcept { return k2_; }

    /// Shell sizes |A|, |B|, |C|, |D| and the remainder e = 3^m - 1 - (a+b+c+d).
    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }
    std::int64_t e() const noexcept { return e_; }

private:
    int m_, k1_, k2_;
    std::int64_t a_, b_, c_, d_, e_;
};

/// Lloyd-polynomial differences at Hamming weight i.
struct GreekTriple {
    std::int64_t alpha;  ///< Psi_{k1-1}(i) - 1
    std::int64_t beta;   ///< Psi_{k1}(i) - Psi_{k1-1}(i)
    std::int64_t gamma;  ///< Psi_{k2-1}(i) - Psi_{k1}(i)
    std::int64_t delta;  ///< Psi_{k2}(i) - Psi_{k2-1}(i)
};

GreekTriple greek_triple(const HWParams& p, int i);

std::pair<TernaryFunction, TernaryFunction> build_fg(const HWParams& p);

/// Validated spec for the built pair.
CodeSpec build_spec(const HWParams& p, unsigned threads = 1);

/// Closed-form distribution: six fixed weights plus four families indexed by 1 <= i <= m.
WeightDistribution closed_form_weight_distribution(const HWParams& p);

/// The enumerator assembled from the v = 0 and v != 0 coordinate-count tables.
CompleteWeightEnumerator closed_form_cwe(const HWParams& p);

struct ExtremeWeights {
    std::int64_t wmin;
    std::int64_t wmax;
    bool ab_satisfied;
    bool ratio_le_two_thirds;
};

/// Closed-form extreme weights and both ratio predicates; throws
/// ConsistencyError if 3 wmin <= 2 wmax disagrees with the integer inequality.
ExtremeWeights theorem4_report(const HWParams& p);

struct ConditionChecks {
    bool condition1_first;   ///< Re F^(v1) + Re F^(v2) - 2 Re F^(v3) != 3^m
    bool condition1_second;  ///< Re F^(v1) + Re F^(v2) + Re F^(v3) != 3^m
    bool condition2;         ///< the mixed-member inequality
    std::uint64_t evaluations;

    bool all() const noexcept { return condition1_first && condition1_second && condition2; }
};

/// Runs the criterion sweep on the built spec and reports each condition.
/// Throws CapacityError (with the completed fraction) when the budget runs out.
ConditionChecks lemma_checks(const HWParams& p, const SweepOptions& options = {});

} // namespace ternmin
