#include "ternmin/gf3.hpp"
#include "ternmin/kraw.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace ternmin;

namespace {

TritVector vec(std::initializer_list<int> digits) {
    std::vector<int> d(digits);
    return TritVector::from_digits(d);
}

} // namespace

TEST_CASE("trit arithmetic reduces mod 3") {
    CHECK((Trit(2) + Trit(2)) == Trit(1));
    CHECK((Trit(0) - Trit(1)) == Trit(2));
    CHECK((Trit(2) * Trit(2)) == Trit(1));
    CHECK(-Trit(1) == Trit(2));
    CHECK(-Trit(0) == Trit(0));
    CHECK(Trit(-4).value() == 2);
}

TEST_CASE("index_to_vector examples") {
    CHECK(index_to_vector(0, 3) == vec({0, 0, 0}));
    CHECK(index_to_vector(4, 3) == vec({1, 1, 0}));
    CHECK(index_to_vector(26, 3) == vec({2, 2, 2}));
    CHECK_THROWS_AS(index_to_vector(27, 3), std::out_of_range);
}

TEST_CASE("dot examples") {
    CHECK(dot(vec({1, 1, 0}), vec({1, 2, 0})) == Trit(0));
    CHECK(dot(vec({0, 0, 0}), vec({2, 1, 2})) == Trit(0));
    CHECK(dot(vec({2, 2}), vec({2, 2})) == Trit(2));
    CHECK_THROWS_AS(dot(vec({1, 2}), vec({1, 2, 0})), std::invalid_argument);
}

TEST_CASE("add, negate, weight examples") {
    CHECK(vec_add(vec({1, 2}), vec({2, 1})) == vec({0, 0}));
    CHECK(hamming_weight(vec({0, 0, 0})) == 0);
    CHECK(hamming_weight(vec({1, 0, 2, 0, 1})) == 3);
    CHECK(vec_neg(vec({1, 0, 2})) == vec({2, 0, 1}));
}

TEST_CASE("index and digits round trip, negation keeps weight") {
    for (int m = 1; m <= 8; ++m) {
        std::vector<std::int64_t> by_weight(m + 1, 0);
        for (std::uint32_t i = 0; i < pow3(m); ++i) {
            const TritVector v(i, m);
            const auto digits = v.digits();
            std::vector<int> raw;
            for (Trit t : digits) raw.push_back(t.value());
            REQUIRE(vector_to_index(TritVector::from_digits(raw)) == i);
            REQUIRE(hamming_weight(vec_neg(v)) == hamming_weight(v));
            REQUIRE(index_weight(i) == hamming_weight(v));
            ++by_weight[hamming_weight(v)];
        }
        for (int i = 0; i <= m; ++i) CHECK(by_weight[i] == sphere_size(m, i));
    }
}

TEST_CASE("dot is bilinear and symmetric") {
    for (int m = 1; m <= 4; ++m) {
        const std::uint32_t n = static_cast<std::uint32_t>(pow3(m));
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                const TritVector va(a, m), vb(b, m);
                REQUIRE(dot(va, vb) == dot(vb, va));
                for (std::uint32_t c = 0; c < n; c += 5) {
                    const TritVector vc(c, m);
                    REQUIRE(dot(vec_add(va, vb), vc) == dot(va, vc) + dot(vb, vc));
                    REQUIRE(dot(vec_scale(Trit(2), va), vc) == Trit(2) * dot(va, vc));
                }
            }
    }
}

TEST_CASE("IndexArithmetic agrees with digit arithmetic") {
    std::mt19937_64 rng(7);
    for (int m : {1, 3, 5, 6, 9, 11}) {
        const IndexArithmetic arith(m);
        std::uniform_int_distribution<std::uint32_t> pick(0, arith.size() - 1);
        for (int i = 0; i < 2000; ++i) {
            const std::uint32_t a = pick(rng), b = pick(rng);
            const TritVector va(a, m), vb(b, m);
            REQUIRE(arith.add(a, b) == vec_add(va, vb).index());
            REQUIRE(arith.sub(a, b) == vec_sub(va, vb).index());
            REQUIRE(arith.neg(a) == vec_neg(va).index());
        }
    }
}

TEST_CASE("dimension limits") {
    CHECK_THROWS_AS(check_dimension(0), std::invalid_argument);
    CHECK_THROWS_AS(check_dimension(kMaxDimension + 1), std::invalid_argument);
    CHECK_NOTHROW(check_dimension(kMaxDimension));
}
