#include <doctest.h>

#include "group.hpp"
#include "util.hpp"
#include "witnesses.hpp"

using namespace gdet;

namespace {

mpz_class oracle(const CoefficientTuple& t) {
    return group_determinant(element_from_tuple(t));
}

}  // namespace

TEST_CASE("base polynomials expand as printed") {
    const auto p = base_polynomials();
    for (int i = 0; i < 4; ++i) {
        CHECK(p.W.a[i] == 1);
        CHECK(p.W.b[i] == 1);
        CHECK(p.W.c[i] == 1);
        CHECK(p.W.d[i] == 1);
        CHECK(p.W2.a[i] == 1);
        CHECK(p.W2.b[i] == 1);
        CHECK(p.W2.c[i] == -1);
        CHECK(p.W2.d[i] == -1);
    }
    CHECK(p.W1 == p.W);

    // W is 16 at (1,1,1) and vanishes at every other sign point; W2 moves the
    // mass to (1,-1,1).
    const auto sw = sign_point_values(p.W);
    const auto sw2 = sign_point_values(p.W2);
    for (int i = 0; i < 8; ++i) {
        CHECK(sw.value[i] == (i == 0 ? 16 : 0));
        CHECK(sw2.value[i] == (i == 2 ? 16 : 0));
    }
}

TEST_CASE("witness family examples") {
    const auto w17 = witness(WitnessFamily::odd_1mod16, 1);
    CHECK(w17.target == 17);
    CHECK(w17.tuple.a == std::array<mpz_class, 4>{2, 1, 1, 1});
    CHECK(w17.tuple.b == std::array<mpz_class, 4>{1, 1, 1, 1});
    CHECK(oracle(w17.tuple) == 17);

    const auto plus = witness(WitnessFamily::even_2_16_plus, 0);
    CHECK(plus.target == 65536);
    CHECK(plus.tuple.b == std::array<mpz_class, 4>{1, 1, -1, -1});
    CHECK(plus.tuple.c == std::array<mpz_class, 4>{1, 0, 0, -1});
    CHECK(plus.tuple.d == std::array<mpz_class, 4>{1, -1, -1, 1});

    CHECK(witness(WitnessFamily::even_2_18, 0).target == 0);
    CHECK(witness(WitnessFamily::odd_3family, 0, mpz_class(1)).target == 57);
    CHECK(witness(WitnessFamily::odd_5family, 0, mpz_class(0)).target == 25);

    CHECK_THROWS_AS(witness(WitnessFamily::odd_3family, 0), std::invalid_argument);
    CHECK_THROWS_AS(witness(WitnessFamily::even_2_17, 0, mpz_class(1)), std::invalid_argument);
}

TEST_CASE("witness families verify against the oracle over a parameter grid") {
    for (WitnessFamily f :
         {WitnessFamily::even_2_18, WitnessFamily::even_2_17, WitnessFamily::even_2_16_plus,
          WitnessFamily::even_2_16_minus, WitnessFamily::odd_1mod16}) {
        for (long m = -3; m <= 3; ++m) {
            const auto w = witness(f, m);
            CHECK(oracle(w.tuple) == w.target);
        }
    }
    for (WitnessFamily f : {WitnessFamily::odd_5family, WitnessFamily::odd_3family})
        for (long m = -2; m <= 2; ++m)
            for (long k = -2; k <= 2; ++k) {
                const auto w = witness(f, m, mpz_class(k));
                CHECK(oracle(w.tuple) == w.target);
            }
}

TEST_CASE("witness_for dispatch examples") {
    const auto w17 = witness_for(17);
    REQUIRE(w17.recipe.has_value());
    CHECK(w17.recipe->family == WitnessFamily::odd_1mod16);
    CHECK(w17.recipe->m == 1);

    const auto w3 = witness_for(mpz_class(3) << 16);
    REQUIRE(w3.recipe.has_value());
    CHECK(w3.recipe->family == WitnessFamily::even_2_16_minus);
    CHECK(w3.recipe->m == 1);

    const auto w25 = witness_for(25);
    REQUIRE(w25.recipe.has_value());
    CHECK(w25.recipe->family == WitnessFamily::odd_5family);
    CHECK(w25.recipe->m == 0);
    CHECK(*w25.recipe->k == 0);

    const auto bad = witness_for(mpz_class(1) << 15);
    CHECK_FALSE(bad.recipe.has_value());
    CHECK_FALSE(bad.check.achievable);
    CHECK(bad.check.reason == AchievabilityReason::even_bad_valuation);

    // 0 = 2^18 * 0.
    const auto zero = witness_for(0);
    REQUIRE(zero.recipe.has_value());
    CHECK(zero.recipe->family == WitnessFamily::even_2_18);
    CHECK(zero.recipe->m == 0);
}

TEST_CASE("witness_for round-trips over a window of achievable integers") {
    int achievable_seen = 0;
    for (long n = -500; n <= 500; ++n) {
        const auto r = witness_for(n);
        CHECK(r.check.achievable == r.recipe.has_value());
        if (!r.recipe) continue;
        ++achievable_seen;
        CHECK(r.recipe->target == n);
        CHECK(oracle(r.recipe->tuple) == n);
    }
    // 1 mod 16, 9 mod 16 with flex primes, and 0 all occur in the window.
    CHECK(achievable_seen > 60);

    // Even family coverage: every t mod 4 dispatches and round-trips.
    for (long t = -9; t <= 9; ++t) {
        const mpz_class n = mpz_class(t) << 16;
        const auto r = witness_for(n);
        REQUIRE(r.recipe.has_value());
        CHECK(oracle(r.recipe->tuple) == n);
    }
}

TEST_CASE("odd witness dispatch by residue and factor pair") {
    // -39 = 3 * (-13), both 3 mod 16.
    const auto r = witness_for(-39);
    REQUIRE(r.recipe.has_value());
    CHECK(r.recipe->family == WitnessFamily::odd_3family);
    CHECK(oracle(r.recipe->tuple) == -39);

    // 41 is prime, 9 mod 16, residue 9 is rigid.
    const auto none = witness_for(41);
    CHECK_FALSE(none.recipe.has_value());
    CHECK(none.check.reason == AchievabilityReason::nine_mod_16_rigid_primes);
}
