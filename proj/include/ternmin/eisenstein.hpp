#pragma once

#include <cstdint>
#include <ostream>

namespace ternmin {

/// a + b*zeta in Z[zeta_3], with zeta^2 = -1 - zeta.
class EisensteinInt {
public:
    constexpr EisensteinInt() = default;
    constexpr EisensteinInt(std::int64_t a, std::int64_t b) noexcept : a_(a), b_(b) {}

    static constexpr EisensteinInt zeta() noexcept { return {0, 1}; }

    /// zeta^k for any integer k.
    static constexpr EisensteinInt zeta_pow(int k) noexcept {
        switch (((k % 3) + 3) % 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1};
        }
    }

    constexpr std::int64_t a() const noexcept { return a_; }
    constexpr std::int64_t b() const noexcept { return b_; }

    /// 2 Re(z) = 2a - b, exact.
    constexpr std::int64_t doubled_real() const noexcept { return 2 * a_ - b_; }
    /// |z|^2 = a^2 - ab + b^2.
    constexpr std::int64_t norm() const noexcept { return a_ * a_ - a_ * b_ + b_ * b_; }
    constexpr EisensteinInt conj() const noexcept { return {a_ - b_, -b_}; }

    friend constexpr EisensteinInt operator+(EisensteinInt x, EisensteinInt y) noexcept {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend constexpr EisensteinInt operator-(EisensteinInt x, EisensteinInt y) noexcept {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    constexpr EisensteinInt operator-() const noexcept { return {-a_, -b_}; }
    friend constexpr EisensteinInt operator*(EisensteinInt x, EisensteinInt y) noexcept {
        return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_};
    }
    constexpr EisensteinInt& operator+=(EisensteinInt y) noexcept { return *this = *this + y; }
    constexpr EisensteinInt& operator*=(EisensteinInt y) noexcept { return *this = *this * y; }

    friend constexpr bool operator==(EisensteinInt, EisensteinInt) = default;

    friend std::ostream& operator<<(std::ostream& os, EisensteinInt z) {
        return os << z.a_ << (z.b_ < 0 ? " - " : " + ") << (z.b_ < 0 ? -z.b_ : z.b_) << "ζ";
    }

private:
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
};

} // namespace ternmin
