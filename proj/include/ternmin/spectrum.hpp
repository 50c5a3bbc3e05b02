#pragma once

// Character-sum (Walsh) transform of functions F_3^m -> F_3.
//
//   F^(w) = sum_x zeta^{F(x) - w.x}
//
// Results are kept as exact value counts N_lambda(w) = #{x : F(x) - w.x = lambda};
// the transform value is (N0 - N2) + (N1 - N2) zeta.

#include "ternmin/eisenstein.hpp"
#include "ternmin/gf3.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ternmin {

/// A total map F_3^m -> F_3 stored as a dense table in enumeration order.
class TernaryFunction {
public:
    /// The zero function.
    explicit TernaryFunction(int m);
    /// Entries must lie in {0,1,2}; size must be 3^m.
    TernaryFunction(int m, std::vector<std::uint8_t> table);

    static TernaryFunction from_generator(int m, const std::function<int(std::uint32_t)>& value_at);
    /// u*F + r*G pointwise.
    static TernaryFunction combine(Trit u, const TernaryFunction& f, Trit r, const TernaryFunction& g);

    int dimension() const noexcept { return m_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
    Trit at(std::uint32_t idx) const { return Trit(table_.at(idx)); }
    std::span<const std::uint8_t> table() const noexcept { return table_; }
    bool is_zero() const noexcept;

    friend TernaryFunction operator+(const TernaryFunction& f, const TernaryFunction& g);
    friend TernaryFunction operator-(const TernaryFunction& f, const TernaryFunction& g);
    TernaryFunction operator-() const;
    friend bool operator==(const TernaryFunction&, const TernaryFunction&) = default;

private:
    int m_;
    std::vector<std::uint8_t> table_;
};

struct CountTriple {
    std::uint32_t n0 = 0;
    std::uint32_t n1 = 0;
    std::uint32_t n2 = 0;

    std::uint32_t operator[](int lambda) const noexcept { return lambda == 0 ? n0 : lambda == 1 ? n1 : n2; }
    friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

class CountSpectrum {
public:
    CountSpectrum(int m, std::vector<CountTriple> counts);

    int dimension() const noexcept { return m_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
    const CountTriple& at(std::uint32_t w) const { return counts_.at(w); }
    std::span<const CountTriple> counts() const noexcept { return counts_; }

    EisensteinInt transform_value(std::uint32_t w) const;

    friend bool operator==(const CountSpectrum&, const CountSpectrum&) = default;

private:
    int m_;
    std::vector<CountTriple> counts_;
};

/// Radix-3 butterfly over Z[zeta_3], O(m 3^m) ring operations.
CountSpectrum transform(const TernaryFunction& f, unsigned threads = 1);

/// Direct O(9^m) evaluation of every count; the reference for transform().
CountSpectrum transform_naive(const TernaryFunction& f);

/// 2 Re(F^(w)) = 2 N0 - N1 - N2.
std::int64_t real_doubled(const CountSpectrum& s, std::uint32_t w);

/// True iff F differs from every linear functional x -> w.x.
bool is_linear_coset_free(const CountSpectrum& s);
bool is_linear_coset_free(const TernaryFunction& f);

/// Counts recovered from a transform value (a, b); throws ConsistencyError
/// when 3 does not divide 3^m - a - b or a count would be negative.
CountTriple counts_from_transform(std::int64_t a, std::int64_t b, int m);

} // namespace ternmin
