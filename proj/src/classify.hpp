#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gdet {

struct PrimePower {
    mpz_class prime;
    unsigned exponent = 0;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> prime_powers;  // primes strictly increasing

    mpz_class reconstruct() const;
};

/**
 * Complete prime factorization. Exact for |n| < 2^63 (trial division over the
 * sieved primes up to 10^6, then deterministic Miller-Rabin plus Brent's
 * variant of Pollard rho); best-effort beyond with an explicit
 * unsupported_range_error when the rho budget runs out.
 * n = 0 is rejected (std::invalid_argument).
 */
Factorization factorize(const mpz_class& n);

enum class AchievabilityReason {
    multiple_of_2_16,
    one_mod_16,
    nine_mod_16_with_flex_prime,
    even_bad_valuation,
    odd_bad_residue,
    nine_mod_16_rigid_primes,
};

const char* reason_name(AchievabilityReason r);

// A flex prime is p = +-3 or +-5 mod 16, i.e. canonical residue in {3,5,11,13}.
bool is_flex_residue(unsigned r);

struct AchievabilityResult {
    bool achievable = false;
    AchievabilityReason reason = AchievabilityReason::odd_bad_residue;
    // Evidence: canonical residue (always), 2-adic valuation (even nonzero n,
    // else -1), flex primes dividing n (odd n = 9 mod 16 only).
    int residue_mod_16 = 0;
    long valuation2 = -1;
    std::vector<mpz_class> flex_primes;
};

/**
 * The Theorem's characterization: even n achievable iff 2^16 | n (0 counts);
 * odd n achievable iff n = 1 mod 16, or n = 9 mod 16 with at least one flex
 * prime factor. Residues of negative n are canonical (in [0,15]).
 */
AchievabilityResult is_achievable(const mpz_class& n);

/**
 * For n = 9 mod 16, n != 0: a pair (d,e), d*e = n, with d = e = 3 (mod 16) or
 * d = e = 5 (mod 16); negative divisors permitted. Among admissible pairs
 * picks the one minimizing max(|d|,|e|), ties broken by residue 3 over 5,
 * then d <= e. nullopt iff no admissible pair exists.
 */
std::optional<std::pair<mpz_class, mpz_class>> factor_pair_search(const mpz_class& n);

}  // namespace gdet
