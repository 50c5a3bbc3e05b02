#pragma once

// Minimality certification for C_{f,g}.
//
// Three routes:
//   - covers():               support inclusion, checked against the weight identity
//                             sum_{c != 0} wt(a + c b) = 2 wt(a) - wt(b);
//   - is_minimal_bruteforce(): every ordered pair of codewords (small m only);
//   - theorem2_check():       inequalities on doubled real parts of the four spectra.
//
// For codewords c1 = G1 + s_a and c2 = G2 + s_b the covering c2 <= c1 holds iff
//   Re(G1+G2)^(-a-b) + Re(G1-G2)^(b-a) - 2 Re G1^(-a) + Re G2^(-b) = 3^m,
// which is invariant under c1 -> -c1 and c2 -> -c2. Same-member pairs and pairs
// with one simplex word give condition (1); distinct members give condition (2).

#include "ternmin/code.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace ternmin {

enum class Method { cover_oracle, theorem2 };

enum class Condition {
    one_first,   ///< Re F^(v1) + Re F^(v2) - 2 Re F^(v3) = 3^m
    one_second,  ///< Re F^(v1) + Re F^(v2) + Re F^(v3) = 3^m
    two,         ///< Re(F1+F2)^(v1+v2) + Re(F1-F2)^(v1-v2) - 2 Re F1^(v1) + Re F2^(v2) = 3^m
};

std::string_view method_name(Method m) noexcept;
std::string_view condition_name(Condition c) noexcept;

/// Supp(covered) is contained in Supp(coverer) and the two are not proportional.
struct CoverWitness {
    CodewordParams coverer;
    CodewordParams covered;
    friend bool operator==(const CoverWitness&, const CoverWitness&) = default;
};

/// An equality among the criterion's inequalities. For condition (1) first ==
/// second and v3 = -v1 - v2; for condition (2) v3 is unused (0).
struct ConditionWitness {
    Condition condition;
    Member first;
    Member second;
    std::uint32_t v1;
    std::uint32_t v2;
    std::uint32_t v3;
    friend bool operator==(const ConditionWitness&, const ConditionWitness&) = default;
};

using Witness = std::variant<CoverWitness, ConditionWitness>;

struct MinimalityVerdict {
    bool minimal = true;
    Method method = Method::cover_oracle;
    std::vector<Witness> witnesses;
};

/// Supp(b) subset of Supp(a). Computed directly and by the weight identity;
/// throws ConsistencyError if the two disagree, std::invalid_argument on a
/// length mismatch.
bool covers(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
bool covers_by_support(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
bool covers_by_weights(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

inline constexpr int kMaxBruteForceDimension = 5;

struct BruteForceOptions {
    unsigned threads = 1;
    /// Stop after this many witnesses; 0 collects all.
    std::size_t max_witnesses = 1;
};

/// Checks every ordered pair of nonzero, non-proportional codewords.
MinimalityVerdict is_minimal_bruteforce(const CodeSpec& spec, const BruteForceOptions& options = {});

struct SweepOptions {
    unsigned threads = 1;
    /// Witnesses kept per condition; 0 collects all. The sweep of a condition
    /// stops once its quota is reached.
    std::size_t max_witnesses = 1;
    /// Wall-clock cap; exceeding it throws CapacityError with the completed fraction.
    std::optional<std::chrono::duration<double>> budget;
    /// Use Re(F2-F1)^(v1-v2) in condition (2) instead of Re(F1-F2)^(v1-v2).
    /// Not equivalent to covering; kept for comparison only.
    bool swapped_difference = false;
};

struct SweepReport {
    MinimalityVerdict verdict;
    bool condition1_first_holds = true;
    bool condition1_second_holds = true;
    bool condition2_holds = true;
    std::uint64_t evaluations = 0;
};

SweepReport theorem2_check(const CodeSpec& spec, const SweepOptions& options = {});

/// The codeword pair a criterion equality corresponds to.
CoverWitness witness_to_cover_pair(const CodeSpec& spec, const ConditionWitness& w);

/// Sufficient condition wmin / wmax > 2/3 for ternary codes. Requires 0 < wmin <= wmax.
bool ashikhmin_barg(std::int64_t wmin, std::int64_t wmax);

} // namespace ternmin
