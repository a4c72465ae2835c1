#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "classify.hpp"
#include "frobenius.hpp"

namespace gdet {

enum class WitnessFamily {
    even_2_18,        // 2^18 * m
    even_2_17,        // 2^17 * (1 + 2m)
    even_2_16_plus,   // 2^16 * (1 + 4m)
    even_2_16_minus,  // 2^16 * (-1 + 4m)
    odd_1mod16,       // 1 + 16m
    odd_5family,      // (5 + 16k)(5 + 16m)
    odd_3family,      // (3 + 16k)(3 + 16m)
};

const char* family_name(WitnessFamily f);
WitnessFamily parse_family(const std::string& name);  // throws std::invalid_argument
bool family_takes_k(WitnessFamily f);

/// W = W1 = (z+1)(z^2+1)(1+x)(1+y); W2 = (z+1)(z^2+1)(1+x)(1-y), expanded.
struct BasePolynomials {
    CoefficientTuple W, W1, W2;
};
BasePolynomials base_polynomials();

/**
 * An explicit coefficient tuple together with the integer it certifies.
 * Constructors verify factored_determinant(tuple).value == target and throw
 * internal_error otherwise, so no recipe leaves this module unverified.
 */
struct WitnessRecipe {
    WitnessFamily family = WitnessFamily::odd_1mod16;
    mpz_class m;
    std::optional<mpz_class> k;  // present iff the family takes k
    mpz_class target;
    CoefficientTuple tuple;
};

WitnessRecipe witness(WitnessFamily f, const mpz_class& m,
                      const std::optional<mpz_class>& k = std::nullopt);

struct WitnessResult {
    AchievabilityResult check;
    std::optional<WitnessRecipe> recipe;  // present iff check.achievable
};

/// Dispatches any achievable integer to a verified recipe; otherwise returns
/// the violated condition in `check` (never a silent failure).
WitnessResult witness_for(const mpz_class& n);

}  // namespace gdet
