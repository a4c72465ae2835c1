#include "classify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

#include "util.hpp"

namespace gdet {

mpz_class Factorization::reconstruct() const {
    mpz_class out = sign;
    for (const auto& pp : prime_powers) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        out *= pw;
    }
    return out;
}

namespace {

constexpr uint32_t kSieveLimit = 1'000'000;

struct SieveTables {
    std::vector<uint32_t> spf;     // smallest prime factor for 0..kSieveLimit
    std::vector<uint32_t> primes;  // all primes <= kSieveLimit
};

const SieveTables& sieve() {
    static const SieveTables tables = [] {
        SieveTables t;
        t.spf.assign(kSieveLimit + 1, 0);
        for (uint32_t i = 2; i <= kSieveLimit; ++i) {
            if (t.spf[i] == 0) {
                t.spf[i] = i;
                t.primes.push_back(i);
            }
            for (uint32_t p : t.primes) {
                if (p > t.spf[i] || uint64_t(p) * i > kSieveLimit) break;
                t.spf[p * i] = p;
            }
        }
        return t;
    }();
    return tables;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t(uint128(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic for all 64-bit inputs with the first twelve prime bases.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

// Brent's cycle variant of Pollard rho; n must be composite and odd.
uint64_t brent_rho_u64(uint64_t n) {
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
        const uint64_t m = 128;
        uint64_t r = 1;
        auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = f(y);
            for (uint64_t k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            do {
                ys = f(ys);
                d = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
        // cycle collapsed onto n itself; retry with the next polynomial
    }
}

void factor_u64(uint64_t m, std::map<mpz_class, unsigned>& out) {
    if (m == 1) return;
    if (m <= kSieveLimit) {
        const auto& t = sieve();
        while (m > 1) {
            uint32_t p = t.spf[m];
            unsigned e = 0;
            while (m % p == 0) { m /= p; ++e; }
            out[mpz_class(p)] += e;
        }
        return;
    }
    if (is_prime_u64(m)) {
        out[mpz_class(static_cast<unsigned long>(m))] += 1;
        return;
    }
    uint64_t d = brent_rho_u64(m);
    factor_u64(d, out);
    factor_u64(m / d, out);
}

// Best-effort path for |n| >= 2^63: bounded rho over mpz. Values this large
// only come from scans over wide boxes; the iteration budget comfortably covers
// them and the failure mode is an explicit error, never a wrong answer.
constexpr unsigned long kMpzRhoBudget = 1u << 24;

void factor_mpz(mpz_class m, std::map<mpz_class, unsigned>& out) {
    if (m == 1) return;
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
        factor_u64(mpz_get_ui(m.get_mpz_t()), out);
        return;
    }
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) > 0) {
        out[m] += 1;
        return;
    }
    for (unsigned long c = 1; c <= 24; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        for (unsigned long i = 0; i < kMpzRhoBudget; ++i) {
            x = (x * x + c) % m;
            y = (y * y + c) % m;
            y = (y * y + c) % m;
            mpz_class diff = x - y;
            if (diff == 0) break;  // cycle without a split; try the next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
            if (d != 1 && d != m) {
                factor_mpz(d, out);
                factor_mpz(m / d, out);
                return;
            }
        }
    }
    throw unsupported_range_error("factorize: rho budget exhausted on " + m.get_str());
}

}  // namespace

Factorization factorize(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    mpz_class m = abs(n);

    std::map<mpz_class, unsigned> acc;
    if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 63) {
        factor_u64(mpz_get_ui(m.get_mpz_t()), acc);
    } else {
        // Strip sieve primes first so rho only sees the rough part.
        const auto& t = sieve();
        for (uint32_t p : t.primes) {
            if (mpz_class(p) * p > m) break;
            if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                unsigned e = 0;
                do {
                    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                    ++e;
                } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
                acc[mpz_class(p)] += e;
            }
            if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 63) break;
        }
        factor_mpz(m, acc);
    }
    for (auto& [p, e] : acc) f.prime_powers.push_back({p, e});
    return f;
}

const char* reason_name(AchievabilityReason r) {
    switch (r) {
        case AchievabilityReason::multiple_of_2_16: return "multiple_of_2_16";
        case AchievabilityReason::one_mod_16: return "one_mod_16";
        case AchievabilityReason::nine_mod_16_with_flex_prime: return "nine_mod_16_with_flex_prime";
        case AchievabilityReason::even_bad_valuation: return "even_bad_valuation";
        case AchievabilityReason::odd_bad_residue: return "odd_bad_residue";
        case AchievabilityReason::nine_mod_16_rigid_primes: return "nine_mod_16_rigid_primes";
    }
    return "?";
}

bool is_flex_residue(unsigned r) { return r == 3 || r == 5 || r == 11 || r == 13; }

AchievabilityResult is_achievable(const mpz_class& n) {
    AchievabilityResult out;
    out.residue_mod_16 = int(canonical_mod(n, 16));
    if (n == 0) {
        out.achievable = true;
        out.reason = AchievabilityReason::multiple_of_2_16;
        return out;
    }
    if (out.residue_mod_16 % 2 == 0) {
        const mpz_class mag = abs(n);
        out.valuation2 = long(mpz_scan1(mag.get_mpz_t(), 0));
        if (out.valuation2 >= 16) {
            out.achievable = true;
            out.reason = AchievabilityReason::multiple_of_2_16;
        } else {
            out.achievable = false;
            out.reason = AchievabilityReason::even_bad_valuation;
        }
        return out;
    }
    if (out.residue_mod_16 == 1) {
        out.achievable = true;
        out.reason = AchievabilityReason::one_mod_16;
        return out;
    }
    if (out.residue_mod_16 != 9) {
        out.achievable = false;
        out.reason = AchievabilityReason::odd_bad_residue;
        return out;
    }
    const Factorization f = factorize(n);
    for (const auto& pp : f.prime_powers)
        if (is_flex_residue(canonical_mod(pp.prime, 16))) out.flex_primes.push_back(pp.prime);
    if (!out.flex_primes.empty()) {
        out.achievable = true;
        out.reason = AchievabilityReason::nine_mod_16_with_flex_prime;
    } else {
        out.achievable = false;
        out.reason = AchievabilityReason::nine_mod_16_rigid_primes;
    }
    return out;
}

std::optional<std::pair<mpz_class, mpz_class>> factor_pair_search(const mpz_class& n) {
    if (n == 0 || canonical_mod(n, 16) != 9)
        throw std::invalid_argument("factor_pair_search: n must be nonzero and 9 mod 16");

    const Factorization f = factorize(n);
    std::vector<mpz_class> divisors{1};
    for (const auto& pp : f.prime_powers) {
        const std::size_t base = divisors.size();
        mpz_class pw = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pw *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pw);
        }
    }

    const mpz_class mag = abs(n);
    std::optional<std::pair<mpz_class, mpz_class>> best;
    mpz_class best_max;
    int best_residue = 0;
    auto consider = [&](mpz_class d, mpz_class e) {
        const unsigned rd = canonical_mod(d, 16), re = canonical_mod(e, 16);
        if (!((rd == 3 && re == 3) || (rd == 5 && re == 5))) return;
        if (d > e) std::swap(d, e);
        const mpz_class cur_max = std::max(abs(d), abs(e));
        if (best && (cur_max > best_max ||
                     (cur_max == best_max && int(rd) > best_residue) ||
                     (cur_max == best_max && int(rd) == best_residue && d >= best->first)))
            return;
        best_max = cur_max;
        best_residue = int(rd);
        best = {d, e};
    };
    for (const auto& d : divisors) {
        const mpz_class e = mag / d;
        if (n > 0) {
            consider(d, e);
            consider(-d, -e);
        } else {
            consider(-d, e);
            consider(d, -e);
        }
    }
    return best;
}

}  // namespace gdet
