#include "ternmin/gf3.hpp"

#include <stdexcept>
#include <string>

namespace ternmin {

void check_dimension(int m) {
    if (m < 1 || m > kMaxDimension)
        throw std::invalid_argument("dimension " + std::to_string(m) + " outside [1, " +
                                    std::to_string(kMaxDimension) + "]");
}

TritVector::TritVector(std::uint32_t index, int m) : index_(index), m_(m) {
    check_dimension(m);
    if (index >= pow3(m))
        throw std::out_of_range("index " + std::to_string(index) + " outside F_3^" + std::to_string(m));
}

TritVector TritVector::from_digits(std::span<const int> digits) {
    const int m = static_cast<int>(digits.size());
    check_dimension(m);
    std::uint32_t idx = 0;
    for (int i = m - 1; i >= 0; --i) {
        if (digits[i] < 0 || digits[i] > 2) throw std::invalid_argument("digit outside {0,1,2}");
        idx = idx * 3 + static_cast<std::uint32_t>(digits[i]);
    }
    return TritVector(idx, m);
}

Trit TritVector::digit(int i) const {
    if (i < 0 || i >= m_) throw std::out_of_range("digit position");
    return Trit(static_cast<int>((index_ / pow3(i)) % 3));
}

std::vector<Trit> TritVector::digits() const {
    std::vector<Trit> out;
    out.reserve(m_);
    std::uint32_t x = index_;
    for (int i = 0; i < m_; ++i, x /= 3) out.emplace_back(static_cast<int>(x % 3));
    return out;
}

TritVector index_to_vector(std::uint64_t idx, int m) {
    check_dimension(m);
    if (idx >= pow3(m)) throw std::out_of_range("index outside F_3^m");
    return TritVector(static_cast<std::uint32_t>(idx), m);
}

std::uint32_t vector_to_index(const TritVector& v) noexcept { return v.index(); }

namespace {

void require_same_dimension(const TritVector& a, const TritVector& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
}

template <typename Op>
TritVector digitwise(const TritVector& a, const TritVector& b, Op op) {
    std::uint32_t x = a.index(), y = b.index(), out = 0, scale = 1;
    for (int i = 0; i < a.dimension(); ++i, x /= 3, y /= 3, scale *= 3)
        out += scale * static_cast<std::uint32_t>(op(Trit(static_cast<int>(x % 3)), Trit(static_cast<int>(y % 3))).value());
    return TritVector(out, a.dimension());
}

} // namespace

Trit dot(const TritVector& a, const TritVector& b) {
    require_same_dimension(a, b);
    std::uint32_t x = a.index(), y = b.index();
    int acc = 0;
    for (int i = 0; i < a.dimension(); ++i, x /= 3, y /= 3) acc += static_cast<int>((x % 3) * (y % 3));
    return Trit(acc);
}

TritVector vec_add(const TritVector& a, const TritVector& b) {
    require_same_dimension(a, b);
    return digitwise(a, b, [](Trit s, Trit t) { return s + t; });
}

TritVector vec_sub(const TritVector& a, const TritVector& b) {
    require_same_dimension(a, b);
    return digitwise(a, b, [](Trit s, Trit t) { return s - t; });
}

TritVector vec_neg(const TritVector& a) { return vec_scale(Trit(2), a); }

TritVector vec_scale(Trit c, const TritVector& a) {
    return digitwise(a, a, [c](Trit s, Trit) { return c * s; });
}

int hamming_weight(const TritVector& a) noexcept { return index_weight(a.index()); }

int index_weight(std::uint32_t idx) noexcept {
    int w = 0;
    for (; idx != 0; idx /= 3) w += (idx % 3) != 0;
    return w;
}

std::vector<std::uint8_t> weight_table(int m) {
    check_dimension(m);
    const std::uint32_t n = static_cast<std::uint32_t>(pow3(m));
    std::vector<std::uint8_t> w(n, 0);
    // weight(x) = weight(x / 3) + [x % 3 != 0]
    for (std::uint32_t x = 1; x < n; ++x) w[x] = static_cast<std::uint8_t>(w[x / 3] + (x % 3 != 0));
    return w;
}

IndexArithmetic::IndexArithmetic(int m)
    : m_(m),
      size_(static_cast<std::uint32_t>(pow3(m))),
      chunks_((m + kChunkDigits - 1) / kChunkDigits),
      add_(kChunkSize * kChunkSize),
      sub_(kChunkSize * kChunkSize) {
    check_dimension(m);
    for (int x = 0; x < kChunkSize; ++x) {
        const TritVector vx(static_cast<std::uint32_t>(x), kChunkDigits);
        neg_[x] = static_cast<std::uint8_t>(vec_neg(vx).index());
        for (int y = 0; y < kChunkSize; ++y) {
            const TritVector vy(static_cast<std::uint32_t>(y), kChunkDigits);
            add_[x * kChunkSize + y] = static_cast<std::uint8_t>(vec_add(vx, vy).index());
            sub_[x * kChunkSize + y] = static_cast<std::uint8_t>(vec_sub(vx, vy).index());
        }
    }
}

std::uint32_t IndexArithmetic::add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t out = 0, scale = 1;
    for (int c = 0; c < chunks_; ++c, a /= kChunkSize, b /= kChunkSize, scale *= kChunkSize)
        out += scale * add_[(a % kChunkSize) * kChunkSize + b % kChunkSize];
    return out;
}

std::uint32_t IndexArithmetic::sub(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t out = 0, scale = 1;
    for (int c = 0; c < chunks_; ++c, a /= kChunkSize, b /= kChunkSize, scale *= kChunkSize)
        out += scale * sub_[(a % kChunkSize) * kChunkSize + b % kChunkSize];
    return out;
}

std::uint32_t IndexArithmetic::neg(std::uint32_t a) const noexcept {
    std::uint32_t out = 0, scale = 1;
    for (int c = 0; c < chunks_; ++c, a /= kChunkSize, scale *= kChunkSize) out += scale * neg_[a % kChunkSize];
    return out;
}

} // namespace ternmin
