#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "frobenius.hpp"

namespace gdet {

/// Pairwise coefficient sums: alpha1 = a0+a2, alpha2 = a1+a3, and so on
/// through beta (b), gamma (c), delta (d).
struct GreekVector {
    mpz_class alpha1, alpha2, beta1, beta2, gamma1, gamma2, delta1, delta2;
};

/// l1 = F(1,1,1)^2 + F(-1,1,1)^2, l2 = F(1,-1,1)^2 + F(-1,-1,1)^2,
/// l3 = F(1,1,-1)^2 + F(-1,1,-1)^2, l4 = F(1,-1,-1)^2 + F(-1,-1,-1)^2.
struct EllQuadruple {
    mpz_class l1, l2, l3, l4;
};

/// m1 = F(1,1,1)F(-1,1,1), m2 = F(1,-1,1)F(-1,-1,1),
/// m3 = F(1,1,-1)F(-1,1,-1), m4 = F(1,-1,-1)F(-1,-1,-1).
struct EmQuadruple {
    mpz_class m1, m2, m3, m4;
};

/// U1 = a^2 sums with the U sign pattern, U2 = all eight squares,
/// V1 = alpha1*gamma1 + alpha2*gamma2 + beta1*delta1 + beta2*delta2.
struct AuxSums {
    mpz_class U1, U2, V1;
};

GreekVector greek_vector(const CoefficientTuple& t);
EllQuadruple ell_values(const CoefficientTuple& t);
EmQuadruple em_values(const CoefficientTuple& t);
AuxSums aux_sums(const GreekVector& g);

struct IdentityCheck {
    int id = 0;
    const char* name = "";
    bool pass = false;
    // Identity 8's mod-16 congruence only applies under the divisibility
    // hypothesis 4 | beta1 +- beta2 +- delta1 -+ delta2 (all four combinations);
    // its exact form is always checked. Everything else is unconditional.
    bool congruence_applicable = true;
    std::string detail;
};

struct IdentityReport {
    bool all_pass = false;
    std::vector<IdentityCheck> checks;  // nine entries, ids 1..9
};

/// Evaluates the nine exact identities / congruences underlying the exclusion
/// proofs. Every integer tuple must pass; a failure names the identity and
/// signals a transcription bug.
IdentityReport check_identities(const CoefficientTuple& t);

struct IdentityTrialsReport {
    uint64_t trials = 0;
    int64_t bound = 0;
    uint64_t seed = 0;
    uint64_t failures = 0;
    std::optional<std::array<int64_t, 16>> first_failure_tuple;
    std::string first_failure_name;
};

/// Seeded property run: `trials` random tuples with coefficients in
/// [-bound, bound], all nine checks per tuple. Deterministic given (trials,
/// bound, seed). Uses fixed-width arithmetic when the bound provably fits.
IdentityTrialsReport run_identity_trials(uint64_t trials, int64_t bound, uint64_t seed);

}  // namespace gdet
