#pragma once

// The code C_{f,g} = { (u f(x) + r g(x) + v.x)_{x != 0} : u, r in F_3, v in F_3^m }.
//
// Coordinates are the nonzero x in ascending index order. Weights and complete
// weight enumerators come from the count spectra of the four family members
// f, g, f+g, f-g; the other four nonzero combinations are their negatives,
// handled by N1 <-> N2 and w <-> -w.

#include "ternmin/spectrum.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ternmin {

enum class Member : std::uint8_t { f, g, f_plus_g, f_minus_g };

inline constexpr std::array<Member, 4> kMembers{Member::f, Member::g, Member::f_plus_g, Member::f_minus_g};

std::string_view member_name(Member member) noexcept;
std::optional<Member> parse_member(std::string_view name) noexcept;

/// Coefficients (u, r) with member = u f + r g.
struct Coefficients {
    Trit u;
    Trit r;
    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

Coefficients coefficients(Member member) noexcept;

/// u f + r g expressed as +/- a family member; nullopt for (0, 0).
struct SignedMember {
    Member member;
    bool negated;
    friend bool operator==(const SignedMember&, const SignedMember&) = default;
};

std::optional<SignedMember> resolve(Trit u, Trit r) noexcept;

enum class Hypothesis { zero_function, nonzero_at_origin, linear_functional };

std::string_view hypothesis_name(Hypothesis h) noexcept;

/// A family member breaks one of the construction hypotheses.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(Hypothesis hypothesis, Member member, std::optional<std::uint32_t> witness);

    Hypothesis hypothesis() const noexcept { return hypothesis_; }
    Member member() const noexcept { return member_; }
    /// For linear_functional: the w with F(x) = w.x everywhere.
    std::optional<std::uint32_t> witness() const noexcept { return witness_; }

private:
    Hypothesis hypothesis_;
    Member member_;
    std::optional<std::uint32_t> witness_;
};

struct CodewordParams {
    Trit u;
    Trit r;
    std::uint32_t v = 0;
    friend bool operator==(const CodewordParams&, const CodewordParams&) = default;
};

class CodeSpec {
public:
    /// Checks the hypotheses on {f, g, f+g, f-g} and computes their spectra.
    /// Throws ValidationError naming the first violated hypothesis.
    static CodeSpec validate(TernaryFunction f, TernaryFunction g, unsigned threads = 1);

    int m() const noexcept { return m_; }
    std::uint64_t length() const noexcept { return pow3(m_) - 1; }
    const TernaryFunction& f() const noexcept { return functions_[0]; }
    const TernaryFunction& g() const noexcept { return functions_[1]; }
    const TernaryFunction& function(Member member) const noexcept { return functions_[static_cast<int>(member)]; }
    const CountSpectrum& spectrum(Member member) const noexcept { return spectra_[static_cast<int>(member)]; }
    const IndexArithmetic& arithmetic() const noexcept { return arith_; }

    /// 2 Re of (u f + r g)^(w), including the zero combination.
    std::int64_t doubled_real(Trit u, Trit r, std::uint32_t w) const;

    /// Value counts (N0, N1, N2) of the codeword over the nonzero coordinates.
    CountTriple coordinate_counts(const CodewordParams& p) const;

private:
    CodeSpec(int m, std::array<TernaryFunction, 4> functions, std::array<CountSpectrum, 4> spectra);

    int m_;
    std::array<TernaryFunction, 4> functions_;
    std::array<CountSpectrum, 4> spectra_;
    IndexArithmetic arith_;
};

struct Codeword {
    CodewordParams params;
    std::vector<std::uint8_t> word;
};

struct WeightDistribution {
    std::map<std::int64_t, std::uint64_t> entries;

    std::uint64_t total() const noexcept;
    /// Smallest nonzero weight; 0 if there is none.
    std::int64_t min_nonzero() const noexcept;
    std::int64_t max_weight() const noexcept;
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

using ExponentTriple = std::array<std::int64_t, 3>;

struct CompleteWeightEnumerator {
    std::map<ExponentTriple, std::uint64_t> terms;

    std::uint64_t total() const noexcept;
    /// Weight distribution implied by the enumerator (weight = t1 + t2).
    WeightDistribution weights() const;
    friend bool operator==(const CompleteWeightEnumerator&, const CompleteWeightEnumerator&) = default;
};

/// Weight 2*3^{m-1} - (2 Re)/3 read off the stored spectra.
std::int64_t weight_of(const CodeSpec& spec, const CodewordParams& p);

WeightDistribution weight_distribution(const CodeSpec& spec, unsigned threads = 1);
CompleteWeightEnumerator cwe(const CodeSpec& spec, unsigned threads = 1);

/// Number of parameter triples giving the zero word; 1 iff the dimension is m+2.
std::uint64_t zero_word_count(const CodeSpec& spec);
/// m + 2 - log_3(zero_word_count).
int code_dimension(const CodeSpec& spec);

/// Largest m for which materialize() builds dense words.
inline constexpr int kMaxMaterializeDimension = 10;

Codeword materialize(const CodeSpec& spec, const CodewordParams& p);

/// Enumerates all 3^{m+2} parameter triples in (u, r, v) lexicographic order.
std::vector<CodewordParams> all_params(int m);

} // namespace ternmin
