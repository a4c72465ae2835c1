#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gdet {

using int128 = __int128;
using uint128 = unsigned __int128;

// Raised when a mathematically-provable invariant fails at runtime.
// Reaching this means a transcription or implementation bug, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised when an operation is asked to work outside its supported range
// (e.g. factoring an integer too large for the best-effort path).
struct unsupported_range_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(int128 v);

mpz_class mpz_from_i128(int128 v);
// Throws unsupported_range_error if v does not fit in a signed 128-bit integer.
int128 i128_from_mpz(const mpz_class& v);

// Parses a base-10 integer (optional leading '-'); throws std::invalid_argument on junk.
mpz_class parse_mpz(const std::string& s);

// Counter-based deterministic generator (splitmix64). Stable across platforms,
// unlike the std:: distributions.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) via Lemire's multiply-then-reject reduction.
    uint64_t below(uint64_t n) {
        uint128 m = uint128(next()) * uint128(n);
        auto lo = uint64_t(m);
        if (lo < n) {
            const uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                m = uint128(next()) * uint128(n);
                lo = uint64_t(m);
            }
        }
        return uint64_t(m >> 64);
    }

    int64_t in_range(int64_t lo, int64_t hi) {
        return lo + int64_t(below(uint64_t(hi - lo + 1)));
    }
};

// Canonical nonnegative residue in [0, mod), also for negative n.
inline unsigned canonical_mod(const mpz_class& n, unsigned mod) {
    return unsigned(mpz_fdiv_ui(n.get_mpz_t(), mod));
}

// Mixes a stream/sample label into a seed, so every (seed, index) pair yields an
// independent deterministic stream regardless of how work is partitioned.
inline uint64_t seed_for_index(uint64_t seed, uint64_t index) {
    SplitMix64 s(seed ^ (0x6a09e667f3bcc909ull + index * 0x9e3779b97f4a7c15ull));
    s.next();
    return s.next();
}

}  // namespace gdet
