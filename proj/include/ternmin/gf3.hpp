#pragma once

// Arithmetic over F_3 and the vector space F_3^m.
//
// Vectors are stored packed as their base-3 index (digit i carries weight 3^i),
// so the canonical enumeration order of F_3^m is ascending index.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace ternmin {

/// Largest supported dimension; dense tables hold 3^m entries.
inline constexpr int kMaxDimension = 16;

/// 3^e for 0 <= e <= 39.
constexpr std::uint64_t pow3(int e) noexcept {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

/// Throws std::invalid_argument unless 1 <= m <= kMaxDimension.
void check_dimension(int m);

class Trit {
public:
    constexpr Trit() = default;
    /// Reduces any integer into {0,1,2}.
    constexpr explicit Trit(int v) noexcept : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    constexpr int value() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend constexpr Trit operator+(Trit a, Trit b) noexcept { return Trit(a.v_ + b.v_); }
    friend constexpr Trit operator-(Trit a, Trit b) noexcept { return Trit(a.v_ + 3 - b.v_); }
    friend constexpr Trit operator*(Trit a, Trit b) noexcept { return Trit(a.v_ * b.v_); }
    constexpr Trit operator-() const noexcept { return Trit(3 - v_); }
    friend constexpr bool operator==(Trit, Trit) = default;

private:
    std::uint8_t v_ = 0;
};

class TritVector {
public:
    TritVector(std::uint32_t index, int m);

    /// Builds from little-endian digits; each digit must be in {0,1,2}.
    static TritVector from_digits(std::span<const int> digits);

    int dimension() const noexcept { return m_; }
    std::uint32_t index() const noexcept { return index_; }
    Trit digit(int i) const;
    std::vector<Trit> digits() const;

    friend bool operator==(const TritVector&, const TritVector&) = default;

private:
    std::uint32_t index_;
    int m_;
};

TritVector index_to_vector(std::uint64_t idx, int m);
std::uint32_t vector_to_index(const TritVector& v) noexcept;

Trit dot(const TritVector& a, const TritVector& b);
TritVector vec_add(const TritVector& a, const TritVector& b);
TritVector vec_sub(const TritVector& a, const TritVector& b);
TritVector vec_neg(const TritVector& a);
TritVector vec_scale(Trit c, const TritVector& a);
int hamming_weight(const TritVector& a) noexcept;

/// Hamming weight of a raw index in F_3^m.
int index_weight(std::uint32_t idx) noexcept;

/// Hamming weight of every index of F_3^m, in enumeration order.
std::vector<std::uint8_t> weight_table(int m);

/// Digit-parallel index arithmetic on F_3^m.
///
/// The index is cut into chunks of at most five digits; each chunk has
/// 243x243 lookup tables for addition and subtraction, so an add costs one
/// table read per chunk with no division.
class IndexArithmetic {
public:
    static constexpr int kChunkDigits = 5;
    static constexpr int kChunkSize = 243;

    explicit IndexArithmetic(int m);

    int dimension() const noexcept { return m_; }
    std::uint32_t size() const noexcept { return size_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg(std::uint32_t a) const noexcept;

    /// Row of the per-chunk addition table: chunk_add_row(x)[y] = x + y.
    const std::uint8_t* chunk_add_row(std::uint32_t x) const noexcept { return &add_[x * kChunkSize]; }
    const std::uint8_t* chunk_sub_row(std::uint32_t x) const noexcept { return &sub_[x * kChunkSize]; }

private:
    int m_;
    std::uint32_t size_;
    int chunks_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> sub_;
    std::array<std::uint8_t, kChunkSize> neg_{};
};

} // namespace ternmin
