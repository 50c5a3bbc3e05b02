#include "support.hpp"

#include "ternmin/errors.hpp"
#include "ternmin/hwconstruct.hpp"
#include "ternmin/spectrum.hpp"

#include <doctest.h>

using namespace ternmin;
using ternmin::testing::random_function;

TEST_CASE("Eisenstein ring laws") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-50, 50);
    auto pick = [&] { return EisensteinInt(coef(rng), coef(rng)); };
    for (int i = 0; i < 500; ++i) {
        const auto x = pick(), y = pick(), z = pick();
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x * y == y * x);
        REQUIRE((x * y).norm() == x.norm() * y.norm());
        REQUIRE((x * x.conj()) == EisensteinInt(x.norm(), 0));
    }
    CHECK(EisensteinInt::zeta() * EisensteinInt::zeta() == EisensteinInt(-1, -1));
    CHECK(EisensteinInt::zeta_pow(3) == EisensteinInt(1, 0));
    CHECK(EisensteinInt::zeta_pow(-1) == EisensteinInt(-1, -1));
    CHECK(EisensteinInt(3, 1).doubled_real() == 5);
}

TEST_CASE("zero function") {
    const TernaryFunction zero(2);
    const auto s = transform(zero);
    CHECK(s.at(0) == CountTriple{9, 0, 0});
    for (std::uint32_t w = 1; w < 9; ++w) CHECK(s.at(w) == CountTriple{3, 3, 3});
    CHECK(real_doubled(s, 0) == 18);
    for (std::uint32_t w = 1; w < 9; ++w) CHECK(real_doubled(s, w) == 0);
    CHECK_FALSE(is_linear_coset_free(zero));
}

TEST_CASE("linear functions are detected") {
    for (int m = 1; m <= 6; ++m)
        for (std::uint32_t c : {1u, static_cast<std::uint32_t>(pow3(m) - 1)}) {
            const TritVector cv(c, m);
            const auto f = TernaryFunction::from_generator(m, [&](std::uint32_t x) { return dot(cv, TritVector(x, m)).value(); });
            const auto s = transform(f);
            CHECK(s.at(c) == CountTriple{static_cast<std::uint32_t>(pow3(m)), 0, 0});
            CHECK_FALSE(is_linear_coset_free(s));
        }
    const auto proj = TernaryFunction::from_generator(4, [](std::uint32_t x) { return static_cast<int>(x % 3); });
    CHECK_FALSE(is_linear_coset_free(proj));
}

TEST_CASE("fast transform equals naive, Parseval holds") {
    std::mt19937_64 rng(11);
    for (int m = 1; m <= 6; ++m)
        for (int i = 0; i < 20; ++i) {
            const auto f = random_function(m, rng, false);
            const auto fast = transform(f);
            REQUIRE(fast == transform_naive(f));
            std::int64_t energy = 0;
            for (std::uint32_t w = 0; w < fast.size(); ++w) energy += fast.transform_value(w).norm();
            REQUIRE(energy == static_cast<std::int64_t>(pow3(2 * m)));
        }
}

TEST_CASE("transform is independent of thread count") {
    std::mt19937_64 rng(5);
    const auto f = random_function(9, rng);
    CHECK(transform(f, 1) == transform(f, 3));
}

TEST_CASE("negation reflects the spectrum") {
    std::mt19937_64 rng(13);
    for (int m = 1; m <= 6; ++m) {
        const auto f = random_function(m, rng);
        const auto s = transform(f), t = transform(-f);
        const IndexArithmetic arith(m);
        for (std::uint32_t w = 0; w < s.size(); ++w) {
            REQUIRE(real_doubled(t, w) == real_doubled(s, arith.neg(w)));
            REQUIRE(t.at(w) == CountTriple{s.at(arith.neg(w)).n0, s.at(arith.neg(w)).n2, s.at(arith.neg(w)).n1});
        }
    }
}

TEST_CASE("count recovery") {
    CHECK(counts_from_transform(9, 0, 2) == CountTriple{9, 0, 0});
    CHECK(counts_from_transform(0, 0, 2) == CountTriple{3, 3, 3});
    CHECK_THROWS_AS(counts_from_transform(1, 0, 2), ConsistencyError);
    CHECK_THROWS_AS(counts_from_transform(30, 0, 2), ConsistencyError);
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(TernaryFunction(2, std::vector<std::uint8_t>(8, 0)), std::invalid_argument);
    CHECK_THROWS_AS(TernaryFunction(1, std::vector<std::uint8_t>{0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(TernaryFunction(1) + TernaryFunction(2), std::invalid_argument);
}

TEST_CASE("weight-ball functions at m = 9") {
    const HWParams p(9, 2, 4);
    const auto [f, g] = build_fg(p);
    CHECK(is_linear_coset_free(f));
    CHECK(real_doubled(transform(f + g), 0) == 36864);
}
