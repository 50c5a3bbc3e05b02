#include "ternmin/spectrum.hpp"

#include "ternmin/errors.hpp"
#include "ternmin/parallel.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ternmin {

TernaryFunction::TernaryFunction(int m) : m_(m) {
    check_dimension(m);
    table_.assign(pow3(m), 0);
}

TernaryFunction::TernaryFunction(int m, std::vector<std::uint8_t> table) : m_(m), table_(std::move(table)) {
    check_dimension(m);
    if (table_.size() != pow3(m))
        throw std::invalid_argument("function table has " + std::to_string(table_.size()) + " entries, expected 3^" +
                                    std::to_string(m));
    for (std::uint8_t v : table_)
        if (v > 2) throw std::invalid_argument("function table entry outside {0,1,2}");
}

TernaryFunction TernaryFunction::from_generator(int m, const std::function<int(std::uint32_t)>& value_at) {
    TernaryFunction f(m);
    for (std::uint32_t x = 0; x < f.size(); ++x) f.table_[x] = static_cast<std::uint8_t>(Trit(value_at(x)).value());
    return f;
}

TernaryFunction TernaryFunction::combine(Trit u, const TernaryFunction& f, Trit r, const TernaryFunction& g) {
    if (f.m_ != g.m_) throw std::invalid_argument("dimension mismatch");
    TernaryFunction h(f.m_);
    for (std::size_t x = 0; x < h.table_.size(); ++x)
        h.table_[x] = static_cast<std::uint8_t>((u.value() * f.table_[x] + r.value() * g.table_[x]) % 3);
    return h;
}

bool TernaryFunction::is_zero() const noexcept {
    for (std::uint8_t v : table_)
        if (v != 0) return false;
    return true;
}

TernaryFunction operator+(const TernaryFunction& f, const TernaryFunction& g) {
    return TernaryFunction::combine(Trit(1), f, Trit(1), g);
}

TernaryFunction operator-(const TernaryFunction& f, const TernaryFunction& g) {
    return TernaryFunction::combine(Trit(1), f, Trit(2), g);
}

TernaryFunction TernaryFunction::operator-() const { return combine(Trit(2), *this, Trit(0), *this); }

CountSpectrum::CountSpectrum(int m, std::vector<CountTriple> counts) : m_(m), counts_(std::move(counts)) {
    check_dimension(m);
    if (counts_.size() != pow3(m)) throw std::invalid_argument("spectrum size must be 3^m");
    const std::uint64_t total = pow3(m);
    for (const auto& c : counts_)
        if (std::uint64_t{c.n0} + c.n1 + c.n2 != total) throw ConsistencyError("N0 + N1 + N2 != 3^m");
}

EisensteinInt CountSpectrum::transform_value(std::uint32_t w) const {
    const auto& c = at(w);
    return {std::int64_t{c.n0} - c.n2, std::int64_t{c.n1} - c.n2};
}

CountTriple counts_from_transform(std::int64_t a, std::int64_t b, int m) {
    const std::int64_t total = static_cast<std::int64_t>(pow3(m));
    const std::int64_t rest = total - a - b;
    if (rest % 3 != 0) throw ConsistencyError("transform value not divisible back into counts");
    const std::int64_t n2 = rest / 3;
    const std::int64_t n0 = a + n2;
    const std::int64_t n1 = b + n2;
    if (n0 < 0 || n1 < 0 || n2 < 0) throw ConsistencyError("negative count recovered from transform");
    return {static_cast<std::uint32_t>(n0), static_cast<std::uint32_t>(n1), static_cast<std::uint32_t>(n2)};
}

namespace {

// Coordinates stay within [-3^m, 3^m] at every stage, so int32 suffices.
struct Cell {
    std::int32_t a;
    std::int32_t b;
};

inline Cell add3(Cell x, Cell y, Cell z) { return {x.a + y.a + z.a, x.b + y.b + z.b}; }
// zeta * (a + b zeta) = -b + (a - b) zeta
inline Cell times_zeta(Cell x) { return {-x.b, x.a - x.b}; }
// zeta^2 * (a + b zeta) = (b - a) - a zeta
inline Cell times_zeta2(Cell x) { return {x.b - x.a, -x.a}; }

} // namespace

CountSpectrum transform(const TernaryFunction& f, unsigned threads) {
    const int m = f.dimension();
    if (m > kMaxDimension) throw CapacityError("transform: dimension above capacity");
    const std::uint32_t n = f.size();

    constexpr std::array<Cell, 3> kRoots{Cell{1, 0}, Cell{0, 1}, Cell{-1, -1}};
    std::vector<Cell> cells(n);
    for (std::uint32_t x = 0; x < n; ++x) cells[x] = kRoots[f.table()[x]];

    threads = resolve_threads(threads);
    // Stage d combines the three entries differing only in digit d with the
    // kernel zeta^{-k j}: out_0 = x0+x1+x2, out_1 = x0+z^2 x1+z x2, out_2 = x0+z x1+z^2 x2.
    std::uint32_t stride = 1;
    for (int d = 0; d < m; ++d, stride *= 3) {
        const std::uint32_t groups = n / 3;
        parallel_for(groups, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
            for (std::uint64_t gidx = begin; gidx < end; ++gidx) {
                const std::uint32_t g = static_cast<std::uint32_t>(gidx);
                const std::uint32_t base = (g / stride) * stride * 3 + g % stride;
                const Cell x0 = cells[base], x1 = cells[base + stride], x2 = cells[base + 2 * stride];
                cells[base] = add3(x0, x1, x2);
                cells[base + stride] = add3(x0, times_zeta2(x1), times_zeta(x2));
                cells[base + 2 * stride] = add3(x0, times_zeta(x1), times_zeta2(x2));
            }
        });
    }

    std::vector<CountTriple> counts(n);
    for (std::uint32_t w = 0; w < n; ++w) counts[w] = counts_from_transform(cells[w].a, cells[w].b, m);
    return CountSpectrum(m, std::move(counts));
}

CountSpectrum transform_naive(const TernaryFunction& f) {
    const int m = f.dimension();
    const std::uint32_t n = f.size();
    constexpr int kLowDigits = 5;
    const int low_digits = m < kLowDigits ? m : kLowDigits;
    const std::uint32_t low_size = static_cast<std::uint32_t>(pow3(low_digits));
    const std::uint32_t high_size = n / low_size;

    std::vector<CountTriple> counts(n);
    std::vector<std::uint8_t> dot_low(low_size), dot_high(high_size);
    for (std::uint32_t w = 0; w < n; ++w) {
        // w.x splits into the dot over the low digits plus the dot over the rest.
        const TritVector wv(w, m);
        for (std::uint32_t x = 0; x < low_size; ++x) {
            int acc = 0;
            for (int i = 0, xi = static_cast<int>(x); i < low_digits; ++i, xi /= 3) acc += wv.digit(i).value() * (xi % 3);
            dot_low[x] = static_cast<std::uint8_t>(acc % 3);
        }
        for (std::uint32_t x = 0; x < high_size; ++x) {
            int acc = 0;
            for (int i = low_digits, xi = static_cast<int>(x); i < m; ++i, xi /= 3) acc += wv.digit(i).value() * (xi % 3);
            dot_high[x] = static_cast<std::uint8_t>(acc % 3);
        }
        std::array<std::uint32_t, 3> c{};
        const auto table = f.table();
        for (std::uint32_t hi = 0, x = 0; hi < high_size; ++hi)
            for (std::uint32_t lo = 0; lo < low_size; ++lo, ++x) ++c[(table[x] + 6 - dot_low[lo] - dot_high[hi]) % 3];
        counts[w] = {c[0], c[1], c[2]};
    }
    return CountSpectrum(m, std::move(counts));
}

std::int64_t real_doubled(const CountSpectrum& s, std::uint32_t w) {
    const auto& c = s.at(w);
    return 2 * std::int64_t{c.n0} - c.n1 - c.n2;
}

bool is_linear_coset_free(const CountSpectrum& s) {
    // Re F^(w) = 3^m exactly when F(x) = w.x for every x.
    const std::int64_t full = 2 * static_cast<std::int64_t>(pow3(s.dimension()));
    for (std::uint32_t w = 0; w < s.size(); ++w)
        if (real_doubled(s, w) == full) return false;
    return true;
}

bool is_linear_coset_free(const TernaryFunction& f) { return is_linear_coset_free(transform(f)); }

} // namespace ternmin
