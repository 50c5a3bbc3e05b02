#include "support.hpp"

#include "ternmin/errors.hpp"
#include "ternmin/hwconstruct.hpp"
#include "ternmin/minimality.hpp"

#include <doctest.h>

using namespace ternmin;
using namespace ternmin::testing;

namespace {

using Word = std::vector<std::uint8_t>;

bool cover_pair_holds(const CodeSpec& spec, const CoverWitness& w) {
    const auto a = materialize(spec, w.coverer).word, b = materialize(spec, w.covered).word;
    if (hamming(b) == 0) return false;
    for (int c = 1; c <= 2; ++c) {
        bool proportional = true;
        for (std::size_t i = 0; i < a.size(); ++i) proportional = proportional && a[i] == (c * b[i]) % 3;
        if (proportional) return false;
    }
    return covers(a, b);
}

} // namespace

TEST_CASE("covers examples") {
    CHECK(covers(Word{1, 2, 0}, Word{2, 0, 0}));
    CHECK_FALSE(covers(Word{1, 0, 0}, Word{0, 1, 0}));
    CHECK(covers(Word{1, 1, 1}, Word{0, 0, 0}));
    CHECK(covers(Word{2, 1, 0, 1}, Word{2, 1, 0, 1}));
    CHECK_THROWS_AS(covers(Word{1}, Word{1, 0}), std::invalid_argument);
}

TEST_CASE("support inclusion matches the weight identity on all of F_3^4") {
    const std::uint32_t n = static_cast<std::uint32_t>(pow3(4));
    std::vector<Word> words;
    for (std::uint32_t i = 0; i < n; ++i) {
        Word w;
        for (Trit t : TritVector(i, 4).digits()) w.push_back(static_cast<std::uint8_t>(t.value()));
        words.push_back(w);
    }
    for (const auto& a : words)
        for (const auto& b : words) {
            REQUIRE(covers_by_support(a, b) == covers_by_weights(a, b));
            if (covers(a, b)) {
                REQUIRE(covers(a, a));
                for (const auto& c : words)
                    if (covers(b, c)) REQUIRE(covers(a, c));
            }
        }
}

TEST_CASE("Ashikhmin-Barg predicate") {
    CHECK_FALSE(ashikhmin_barg(834, 14226));
    CHECK_FALSE(ashikhmin_barg(2, 3));
    CHECK(ashikhmin_barg(3, 4));
    CHECK_THROWS_AS(ashikhmin_barg(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(ashikhmin_barg(5, 4), std::invalid_argument);
}

TEST_CASE("criterion sweep agrees with the covering oracle") {
    std::mt19937_64 rng(2024);
    int non_minimal = 0;
    for (int m = 2; m <= 4; ++m)
        for (int i = 0; i < 40; ++i) {
            const auto spec = random_spec(m, rng);
            REQUIRE(spec);
            const auto oracle = is_minimal_bruteforce(*spec);
            const auto sweep = theorem2_check(*spec);
            REQUIRE(oracle.minimal == sweep.verdict.minimal);
            REQUIRE(sweep.verdict.minimal == (sweep.condition1_first_holds && sweep.condition1_second_holds && sweep.condition2_holds));
            for (const auto& w : oracle.witnesses) REQUIRE(cover_pair_holds(*spec, std::get<CoverWitness>(w)));
            for (const auto& w : sweep.verdict.witnesses)
                REQUIRE(cover_pair_holds(*spec, witness_to_cover_pair(*spec, std::get<ConditionWitness>(w))));
            non_minimal += !oracle.minimal;
        }
    CHECK(non_minimal > 0);
}

TEST_CASE("every criterion witness maps to a real covering pair") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; ++i) {
        const auto spec = random_spec(3, rng);
        REQUIRE(spec);
        SweepOptions opt;
        opt.max_witnesses = 0;
        const auto sweep = theorem2_check(*spec, opt);
        BruteForceOptions all;
        all.max_witnesses = 0;
        const auto oracle = is_minimal_bruteforce(*spec, all);
        for (const auto& w : sweep.verdict.witnesses)
            REQUIRE(cover_pair_holds(*spec, witness_to_cover_pair(*spec, std::get<ConditionWitness>(w))));
        for (const auto& w : oracle.witnesses) REQUIRE(cover_pair_holds(*spec, std::get<CoverWitness>(w)));
        CHECK(sweep.verdict.witnesses.empty() == oracle.witnesses.empty());
    }
}

TEST_CASE("oracle capacity and budget") {
    const auto big = build_spec(HWParams(9, 2, 4));
    CHECK_THROWS_AS(is_minimal_bruteforce(big), CapacityError);
    SweepOptions opt;
    opt.budget = std::chrono::duration<double>(0.0);
    try {
        theorem2_check(big, opt);
        FAIL("budget not enforced");
    } catch (const CapacityError& e) {
        CHECK(e.completed_fraction() < 1.0);
    }
}

TEST_CASE("sweep results do not depend on thread count") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        const auto spec = random_spec(4, rng);
        REQUIRE(spec);
        SweepOptions one, three;
        one.max_witnesses = three.max_witnesses = 0;
        three.threads = 3;
        const auto a = theorem2_check(*spec, one), b = theorem2_check(*spec, three);
        CHECK(a.verdict.witnesses == b.verdict.witnesses);
        CHECK(a.evaluations == b.evaluations);
    }
}

TEST_CASE("Re(F2-F1) sign pattern in the mixed condition is not equivalent to covering") {
    std::mt19937_64 rng(1);
    int disagreements = 0;
    for (int i = 0; i < 300 && disagreements == 0; ++i) {
        const auto spec = random_spec(3, rng);
        REQUIRE(spec);
        SweepOptions alt;
        alt.swapped_difference = true;
        disagreements += theorem2_check(*spec, alt).verdict.minimal != is_minimal_bruteforce(*spec).minimal;
    }
    CHECK(disagreements > 0);
}
