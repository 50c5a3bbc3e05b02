#include "identities.hpp"

#include "ternmin/kraw.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace ternmin;

TEST_CASE("krawtchouk values") {
    for (int m = 1; m <= 12; ++m)
        for (int t = 0; t <= m; ++t) CHECK(krawtchouk(t, 0, m) == sphere_size(m, t));
    for (int x = 0; x <= 9; ++x) CHECK(krawtchouk(0, x, 9) == 1);
    // 4 C(6,2) - 2 C(3,1) C(6,1) + C(3,2) = 60 - 36 + 3
    CHECK(krawtchouk(2, 3, 9) == 27);
    CHECK(krawtchouk(KrawParams{1, 1, 4, 2}) == 2);
    CHECK_THROWS_AS(krawtchouk(10, 0, 9), std::invalid_argument);
    CHECK_THROWS_AS(krawtchouk(1, -1, 9), std::invalid_argument);
}

TEST_CASE("lloyd values") {
    for (int m = 2; m <= 15; ++m)
        for (int k = 0; k <= m - 1; ++k) CHECK(lloyd(k, 1, m) == sphere_size(m - 1, k));
    for (int x = 0; x <= 9; ++x) CHECK(lloyd(0, x, 9) == 1);
    CHECK(lloyd(3, 2, 9) == krawtchouk(0, 2, 9) + krawtchouk(1, 2, 9) + krawtchouk(2, 2, 9) + krawtchouk(3, 2, 9));
    CHECK(lloyd(3, 2, 9) == 196);
}

TEST_CASE("binomials and shells") {
    CHECK(binomial(9, 2) == 36);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(62, 31) == 465428353255261088LL);
    CHECK(sphere_size(9, 2) == 144);
    CHECK(shell_sum(9, 1, 3) == 18 + 144 + 672);
    CHECK(shell_sum(9, 3, 2) == 0);
    CHECK_THROWS_AS(checked::mul(std::int64_t{1} << 62, 4), std::overflow_error);
}

TEST_CASE("lloyd identities, m <= 20") { CHECK(testing::lloyd_identity_failures(20) == 0); }

TEST_CASE("character sums over weight shells, m <= 7") { CHECK(testing::character_sum_failures(7) == 0); }

TEST_CASE("shell dominance, m <= 24") { CHECK(testing::shell_dominance_failures(24) == 0); }

TEST_CASE("lloyd shell inequality, m <= 20") { CHECK(testing::lloyd_shell_failures(20) == 0); }
