#include <doctest.h>

#include "classify.hpp"
#include "util.hpp"

using namespace gdet;

TEST_CASE("factorize examples") {
    const auto f217 = factorize(217);
    REQUIRE(f217.prime_powers.size() == 2);
    CHECK(f217.sign == 1);
    CHECK(f217.prime_powers[0].prime == 7);
    CHECK(f217.prime_powers[1].prime == 31);

    const auto fneg = factorize(-15);
    CHECK(fneg.sign == -1);
    REQUIRE(fneg.prime_powers.size() == 2);
    CHECK(fneg.prime_powers[0].prime == 3);
    CHECK(fneg.prime_powers[1].prime == 5);

    const auto f2 = factorize(65536);
    REQUIRE(f2.prime_powers.size() == 1);
    CHECK(f2.prime_powers[0].prime == 2);
    CHECK(f2.prime_powers[0].exponent == 16);

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs random 50-bit inputs") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 100000; ++trial) {
        int64_t n = int64_t(rng.below((uint64_t(1) << 50) - 1)) + 1;
        if (rng.below(2)) n = -n;
        const auto f = factorize(n);
        CHECK(f.reconstruct() == n);
        for (std::size_t i = 1; i < f.prime_powers.size(); ++i)
            CHECK(f.prime_powers[i - 1].prime < f.prime_powers[i].prime);
        if (trial % 100 == 0)
            for (const auto& pp : f.prime_powers)
                CHECK(mpz_probab_prime_p(pp.prime.get_mpz_t(), 30) > 0);
    }
}

TEST_CASE("factorize handles values beyond 64 bits") {
    // 2^89 - 1 is a Mersenne prime.
    mpz_class mersenne = (mpz_class(1) << 89) - 1;
    const auto f = factorize(mersenne);
    REQUIRE(f.prime_powers.size() == 1);
    CHECK(f.prime_powers[0].prime == mersenne);

    // A 92-bit semiprime of Mersenne primes exercises the mpz rho path.
    mpz_class p = (mpz_class(1) << 31) - 1, q = (mpz_class(1) << 61) - 1;
    const auto g = factorize(p * q);
    REQUIRE(g.prime_powers.size() == 2);
    CHECK(g.prime_powers[0].prime == p);
    CHECK(g.prime_powers[1].prime == q);
    CHECK(g.reconstruct() == p * q);
}

TEST_CASE("is_achievable examples") {
    CHECK(is_achievable(17).achievable);
    CHECK(is_achievable(17).reason == AchievabilityReason::one_mod_16);

    const auto r41 = is_achievable(41);
    CHECK_FALSE(r41.achievable);
    CHECK(r41.reason == AchievabilityReason::nine_mod_16_rigid_primes);

    const auto r217 = is_achievable(217);
    CHECK_FALSE(r217.achievable);
    CHECK(r217.reason == AchievabilityReason::nine_mod_16_rigid_primes);
    CHECK(r217.flex_primes.empty());

    const auto r57 = is_achievable(57);
    CHECK(r57.achievable);
    CHECK(r57.reason == AchievabilityReason::nine_mod_16_with_flex_prime);
    // 57 = 3 * 19 and both primes are 3 mod 16.
    REQUIRE(r57.flex_primes.size() == 2);
    CHECK(r57.flex_primes[0] == 3);
    CHECK(r57.flex_primes[1] == 19);

    const auto shallow = is_achievable(mpz_class(1) << 15);
    CHECK_FALSE(shallow.achievable);
    CHECK(shallow.reason == AchievabilityReason::even_bad_valuation);
    CHECK(shallow.valuation2 == 15);

    CHECK(is_achievable(0).achievable);
    CHECK(is_achievable(mpz_class(-65536)).achievable);
    CHECK(is_achievable(mpz_class(-65536) * 3).achievable);
    // Negative residues are canonical: -7 = 9 mod 16, no flex prime in 7.
    const auto rneg = is_achievable(-7);
    CHECK(rneg.residue_mod_16 == 9);
    CHECK_FALSE(rneg.achievable);
    // -15 = 1 mod 16.
    CHECK(is_achievable(-15).achievable);
    CHECK(is_achievable(-15).reason == AchievabilityReason::one_mod_16);
    CHECK_FALSE(is_achievable(3).achievable);
    CHECK(is_achievable(3).reason == AchievabilityReason::odd_bad_residue);
}

TEST_CASE("factor_pair_search examples") {
    CHECK(factor_pair_search(9) == std::make_pair(mpz_class(3), mpz_class(3)));
    CHECK(factor_pair_search(25) == std::make_pair(mpz_class(5), mpz_class(5)));
    CHECK_FALSE(factor_pair_search(217).has_value());
    CHECK(factor_pair_search(57) == std::make_pair(mpz_class(3), mpz_class(19)));
    // -39 = 3 * (-13); -13 = 3 mod 16.
    CHECK(factor_pair_search(-39) == std::make_pair(mpz_class(-13), mpz_class(3)));
    CHECK_THROWS_AS(factor_pair_search(0), std::invalid_argument);
    CHECK_THROWS_AS(factor_pair_search(11), std::invalid_argument);
}

TEST_CASE("pair existence coincides with the flex-prime condition") {
    for (long n = -20000; n <= 20000; ++n) {
        if (n == 0 || canonical_mod(n, 16) != 9) continue;
        const bool has_pair = factor_pair_search(n).has_value();
        const bool has_flex = is_achievable(n).achievable;
        CHECK(has_pair == has_flex);
    }
}
